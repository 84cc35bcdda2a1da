#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>

#include "mbm/errors.hpp"
#include "mbm/matrix.hpp"

namespace mbm {

enum class TensorOrder { forward, reversed };
enum class BraidingSign { c, c_inverse };

/// A non-symmetric braiding on the tensor square of a single object A.
/// Validated once at construction: c and c_inv are mutually inverse and c
/// satisfies the braid relation on A^3.
class UserBraiding {
 public:
  UserBraiding(Mat c, Mat c_inv) : c_(std::move(c)), c_inv_(std::move(c_inv)) {
    if (c_.rows() != c_.cols()) throw ShapeError("braiding must be square, got " + c_.shape());
    const std::size_t sq = c_.rows();
    std::size_t n = 1;
    while (n * n < sq) ++n;
    if (n * n != sq) throw ShapeError("braiding size " + std::to_string(sq) + " is not a square dimension");
    dim_ = n;
    if (c_inv_.rows() != sq || c_inv_.cols() != sq) throw ShapeError("inverse braiding has shape " + c_inv_.shape());
    const FieldSpec f = c_.field();
    const Mat id = Mat::identity(f, sq);
    if (!(compose(c_, c_inv_) == id) || !(compose(c_inv_, c_) == id)) {
      throw PreconditionError("braiding and its claimed inverse do not compose to the identity");
    }
    const Mat one = Mat::identity(f, n);
    const Mat c1 = kron(c_, one), c2 = kron(one, c_);
    if (!(compose_chain({c1, c2, c1}) == compose_chain({c2, c1, c2}))) {
      throw PreconditionError("braiding violates the braid relation on A^3");
    }
    if (n == 1 && c_(0, 0) != 1) throw PreconditionError("braiding on the unit object must be the identity");
  }

  /// Convenience: computes the inverse, failing if c is singular.
  static UserBraiding from(Mat c) {
    if (c.rows() != c.cols()) throw ShapeError("braiding must be square, got " + c.shape());
    auto inv = inverse(c);
    if (!inv) throw PreconditionError("braiding is not invertible");
    return UserBraiding(std::move(c), std::move(*inv));
  }

  std::size_t dim() const noexcept { return dim_; }
  const Mat& c() const noexcept { return c_; }
  const Mat& c_inv() const noexcept { return c_inv_; }

 private:
  Mat c_;
  Mat c_inv_;
  std::size_t dim_ = 0;
};

/// One of C, C^rev, C-bar, (C-bar)^rev over a base braided category whose
/// braiding is either the symmetric flip or a user braiding on one object.
///
/// braiding(a, b) is c_{X,Y}: X (x) Y -> Y (x) X for dim X = a, dim Y = b, as
/// a matrix on the realized spaces (tensor() decides the Kronecker order).
/// C^rev keeps the braiding of C (c^rev_{X,Y} = c_{Y,X}); C-bar uses
/// c-bar_{X,Y} = (c_{Y,X})^{-1}.
class BraidedContext {
 public:
  static BraidedContext symmetric(FieldSpec field) { return BraidedContext(field, nullptr); }

  static BraidedContext with_braiding(UserBraiding b) {
    const FieldSpec f = b.c().field();
    return BraidedContext(f, std::make_shared<const UserBraiding>(std::move(b)));
  }

  FieldSpec field() const noexcept { return field_; }
  TensorOrder tensor_order() const noexcept { return order_; }
  BraidingSign braiding_sign() const noexcept { return sign_; }
  bool is_symmetric_flip() const noexcept { return user_ == nullptr; }
  const UserBraiding* user_braiding() const noexcept { return user_.get(); }

  BraidedContext rev() const {
    BraidedContext out = *this;
    out.order_ = order_ == TensorOrder::forward ? TensorOrder::reversed : TensorOrder::forward;
    return out;
  }
  BraidedContext bar() const {
    BraidedContext out = *this;
    out.sign_ = sign_ == BraidingSign::c ? BraidingSign::c_inverse : BraidingSign::c;
    return out;
  }
  /// The same base braiding with forward order and sign c.
  BraidedContext base() const { return BraidedContext(field_, user_); }

  Mat tensor(const Mat& f, const Mat& g) const {
    return order_ == TensorOrder::forward ? kron(f, g) : kron(g, f);
  }
  Mat tensor(const Mat& f, const Mat& g, const Mat& h) const { return tensor(tensor(f, g), h); }

  Mat id(std::size_t n) const { return Mat::identity(field_, n); }

  Mat braiding(std::size_t a, std::size_t b) const {
    if (order_ == TensorOrder::reversed) std::swap(a, b);
    return sign_ == BraidingSign::c ? base_c(a, b) : base_c_inv(b, a);
  }

  Mat braiding_inv(std::size_t a, std::size_t b) const {
    if (order_ == TensorOrder::reversed) std::swap(a, b);
    return sign_ == BraidingSign::c ? base_c_inv(a, b) : base_c(b, a);
  }

  /// Context-independent c_{X,Y} of the underlying category C.
  Mat base_c(std::size_t a, std::size_t b) const {
    if (!user_) return flip(field_, a, b);
    return user_matrix(a, b, user_->c());
  }
  /// (c_{X,Y})^{-1}: Y (x) X -> X (x) Y in C.
  Mat base_c_inv(std::size_t a, std::size_t b) const {
    if (!user_) return flip(field_, b, a);
    return user_matrix(a, b, user_->c_inv());
  }

  friend bool operator==(const BraidedContext& x, const BraidedContext& y) {
    return x.field_ == y.field_ && x.order_ == y.order_ && x.sign_ == y.sign_ && x.user_ == y.user_;
  }

 private:
  BraidedContext(FieldSpec field, std::shared_ptr<const UserBraiding> user)
      : field_(field), user_(std::move(user)) {}

  Mat user_matrix(std::size_t a, std::size_t b, const Mat& m) const {
    const std::size_t n = user_->dim();
    if (a == n && b == n) return m;
    // Braiding with the unit object is the identity.
    if (a == 1 || b == 1) return Mat::identity(field_, a * b);
    throw UnsupportedBraiding("user braiding is defined on dimension " + std::to_string(n) +
                              " only, requested " + std::to_string(a) + "x" + std::to_string(b));
  }

  FieldSpec field_;
  TensorOrder order_ = TensorOrder::forward;
  BraidingSign sign_ = BraidingSign::c;
  std::shared_ptr<const UserBraiding> user_;
};

}  // namespace mbm
