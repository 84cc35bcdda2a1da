#pragma once

#include "mbm/braided_context.hpp"
#include "mbm/catalan.hpp"
#include "mbm/errors.hpp"
#include "mbm/field.hpp"
#include "mbm/generators.hpp"
#include "mbm/matrix.hpp"
#include "mbm/mcat.hpp"
#include "mbm/report.hpp"
#include "mbm/simplicial_models.hpp"
#include "mbm/structure_file.hpp"
#include "mbm/structures.hpp"
