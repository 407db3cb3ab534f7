#include "halftwist/field.hpp"

#include <algorithm>
#include <set>

#include "halftwist/errors.hpp"

namespace halftwist {

int CMFieldDescriptor::conj(int j) const {
  int r = half_degree;
  if (j < 1 || j > 2 * r) throw input_error("embedding index out of range");
  return j <= r ? j + r : j - r;
}

CMType::CMType(CMFieldDescriptor field, std::vector<int> chosen)
    : field_(field) {
  if (!field_.valid()) throw input_error("CM-field needs half_degree >= 1");
  int r = field_.half_degree;
  if (static_cast<int>(chosen.size()) != r)
    throw input_error("CM-type must choose exactly one embedding per pair");
  std::vector<int> by_pair(r, 0);
  for (int j : chosen) {
    if (j < 1 || j > 2 * r) throw input_error("embedding index out of range");
    int pair = j <= r ? j : j - r;
    if (by_pair[pair - 1] != 0)
      throw input_error("CM-type chooses two embeddings from one pair");
    by_pair[pair - 1] = j;
  }
  chosen_ = std::move(by_pair);
}

CMType CMType::standard(CMFieldDescriptor field) {
  std::vector<int> chosen(field.half_degree);
  for (int i = 1; i <= field.half_degree; ++i) chosen[i - 1] = i;
  return CMType(field, std::move(chosen));
}

bool CMType::contains(int embedding) const {
  int r = field_.half_degree;
  if (embedding < 1 || embedding > 2 * r)
    throw input_error("embedding index out of range");
  int pair = embedding <= r ? embedding : embedding - r;
  return chosen_[pair - 1] == embedding;
}

CMType CMType::complement() const {
  std::vector<int> swapped(chosen_.size());
  for (std::size_t i = 0; i < chosen_.size(); ++i)
    swapped[i] = field_.conj(chosen_[i]);
  return CMType(field_, std::move(swapped));
}

QuadElem::QuadElem(Rat a, Rat b, long d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (!is_squarefree(d_))
    throw input_error("field tag d must be a positive squarefree integer");
}

void QuadElem::check_same_field(const QuadElem& y) const {
  if (d_ != y.d_)
    throw field_mismatch_error("elements of Q(sqrt(-" + std::to_string(d_) +
                               ")) and Q(sqrt(-" + std::to_string(y.d_) +
                               ")) do not mix");
}

QuadElem QuadElem::inverse() const {
  if (is_zero()) throw input_error("division by zero in Q(sqrt(-d))");
  Rat n = norm();
  return QuadElem(a_ / n, -b_ / n, d_);
}

QuadElem& QuadElem::operator+=(const QuadElem& y) {
  check_same_field(y);
  a_ += y.a_;
  b_ += y.b_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& y) {
  check_same_field(y);
  a_ -= y.a_;
  b_ -= y.b_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& y) {
  check_same_field(y);
  Rat a = a_ * y.a_ - Rat(d_) * b_ * y.b_;
  Rat b = a_ * y.b_ + b_ * y.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadElem& QuadElem::operator*=(const Rat& c) {
  a_ *= c;
  b_ *= c;
  return *this;
}

QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
QuadElem quad_mul(QuadElem x, const QuadElem& y) { return x *= y; }
QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
QuadElem operator*(QuadElem x, const Rat& c) { return x *= c; }
QuadElem operator*(const Rat& c, QuadElem x) { return x *= c; }

std::string quad_str(const QuadElem& x) {
  if (x.b() == 0) return rational_str(x.a());
  std::string s = rational_str(x.a());
  s += sgn(x.b()) < 0 ? " - " : " + ";
  Rat ab = abs(x.b());
  if (ab != 1) s += rational_str(ab) + "*";
  s += "sqrt(-" + std::to_string(x.d()) + ")";
  return s;
}

}  // namespace halftwist
