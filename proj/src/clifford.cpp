#include "halftwist/clifford.hpp"

#include <bit>
#include <sstream>

#include "halftwist/errors.hpp"

namespace halftwist {

QuadFormDiag::QuadFormDiag(long d_tag, std::vector<Rat> diag_entries)
    : d(d_tag), diag(std::move(diag_entries)) {
  if (!is_squarefree(d))
    throw input_error("form tag d must be a positive squarefree integer");
  if (diag.empty()) throw input_error("quadratic form needs m >= 1");
  // Blades are 32-bit masks over the 2m generators.
  if (m() > 15) throw input_error("quadratic forms are supported up to m = 15");
  for (const Rat& e : diag)
    if (e == 0) throw input_error("quadratic form diagonal entries must be nonzero");
}

Rat QuadFormDiag::gen_square(int g) const {
  if (g < 1 || g > gen_count()) throw input_error("generator index out of range");
  return g <= m() ? diag[g - 1] : Rat(d) * diag[g - m() - 1];
}

Rat QuadFormDiag::diag_product() const {
  Rat p = 1;
  for (const Rat& e : diag) p *= e;
  return p;
}

bool QuadFormDiag::weight2_shape() const {
  if (sgn(diag[0]) >= 0) return false;
  for (std::size_t i = 1; i < diag.size(); ++i)
    if (sgn(diag[i]) <= 0) return false;
  return true;
}

CliffordElem CliffordElem::scalar(const QuadFormDiag& form, const QuadElem& c) {
  return blade_elem(form, 0, c);
}

CliffordElem CliffordElem::scalar(const QuadFormDiag& form, const Rat& c) {
  return blade_elem(form, 0, c);
}

CliffordElem CliffordElem::blade_elem(const QuadFormDiag& form, Blade b,
                                      const QuadElem& c) {
  if (c.d() != form.d) throw field_mismatch_error("coefficient field mismatch");
  CliffordElem e(form, c.is_rational() ? CoeffRing::rational
                                       : CoeffRing::quadratic);
  e.add_term(b, c);
  return e;
}

CliffordElem CliffordElem::blade_elem(const QuadFormDiag& form, Blade b,
                                      const Rat& c) {
  return blade_elem(form, b, QuadElem::from_rational(c, form.d));
}

CliffordElem CliffordElem::generator(const QuadFormDiag& form, int g) {
  if (g < 1 || g > form.gen_count())
    throw input_error("generator index out of range");
  return blade_elem(form, Blade(1) << (g - 1), Rat(1));
}

QuadElem CliffordElem::coeff(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? QuadElem(0, 0, form_.d) : it->second;
}

bool CliffordElem::rational_coeffs() const {
  for (const auto& [b, c] : terms_)
    if (!c.is_rational()) return false;
  return true;
}

void CliffordElem::add_term(Blade b, const QuadElem& c) {
  if (c.d() != form_.d) throw field_mismatch_error("coefficient field mismatch");
  if (b >> form_.gen_count())
    throw input_error("blade uses generators beyond the form");
  auto [it, inserted] = terms_.emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else if (c.is_zero()) {
    terms_.erase(it);
  }
}

namespace {

void check_compatible(const CliffordElem& x, const CliffordElem& y) {
  if (!(x.form() == y.form()))
    throw input_error("Clifford elements over different quadratic forms");
}

CoeffRing joint_ring(const CliffordElem& x, const CliffordElem& y) {
  return (x.ring() == CoeffRing::quadratic || y.ring() == CoeffRing::quadratic)
             ? CoeffRing::quadratic
             : CoeffRing::rational;
}

// Sign from anticommuting the generators of b past those of a into
// ascending order: (-1)^{#{(i,j) in a x b : i > j}}.
int merge_sign(Blade a, Blade b) {
  int inv = 0;
  while (b) {
    int g = std::countr_zero(b);
    inv += std::popcount(a >> (g + 1));
    b &= b - 1;
  }
  return (inv & 1) ? -1 : 1;
}

}  // namespace

CliffordElem operator+(const CliffordElem& x, const CliffordElem& y) {
  check_compatible(x, y);
  CliffordElem out(x.form(), joint_ring(x, y));
  for (const auto& [b, c] : x.terms()) out.add_term(b, c);
  for (const auto& [b, c] : y.terms()) out.add_term(b, c);
  return out;
}

CliffordElem operator-(const CliffordElem& x, const CliffordElem& y) {
  check_compatible(x, y);
  CliffordElem out(x.form(), joint_ring(x, y));
  for (const auto& [b, c] : x.terms()) out.add_term(b, c);
  for (const auto& [b, c] : y.terms()) out.add_term(b, -c);
  return out;
}

CliffordElem operator-(const CliffordElem& x) {
  CliffordElem out(x.form(), x.ring());
  for (const auto& [b, c] : x.terms()) out.add_term(b, -c);
  return out;
}

CliffordElem operator*(const CliffordElem& x, const Rat& c) {
  CliffordElem out(x.form(), x.ring());
  if (c == 0) return out;
  for (const auto& [b, coef] : x.terms()) out.add_term(b, coef * c);
  return out;
}

CliffordElem operator*(const Rat& c, const CliffordElem& x) { return x * c; }

CliffordElem operator*(const QuadElem& c, const CliffordElem& x) {
  CliffordElem out(x.form(),
                   c.is_rational() ? x.ring() : CoeffRing::quadratic);
  if (c.is_zero()) return out;
  for (const auto& [b, coef] : x.terms()) out.add_term(b, c * coef);
  return out;
}

CliffordElem clifford_mul(const CliffordElem& x, const CliffordElem& y) {
  check_compatible(x, y);
  const QuadFormDiag& form = x.form();
  CliffordElem out(form, joint_ring(x, y));
  for (const auto& [bx, cx] : x.terms()) {
    for (const auto& [by, cy] : y.terms()) {
      Rat scale(merge_sign(bx, by));
      Blade common = bx & by;
      while (common) {
        int g = std::countr_zero(common);
        scale *= form.gen_square(g + 1);
        common &= common - 1;
      }
      out.add_term(bx ^ by, (cx * cy) * scale);
    }
  }
  return out;
}

CliffordElem conj_coeffs(const CliffordElem& x) {
  CliffordElem out(x.form(), x.ring());
  for (const auto& [b, c] : x.terms()) out.add_term(b, c.conj());
  return out;
}

CenterInfo center_element(const QuadFormDiag& form) {
  int n = form.gen_count();
  Blade full = (Blade(1) << n) - 1;
  CliffordElem z = CliffordElem::blade_elem(form, full, Rat(1));
  CliffordElem z_sq = clifford_mul(z, z);
  if (z_sq.terms().size() != 1 || z_sq.terms().begin()->first != 0)
    throw consistency_error("z^2 is not a scalar");
  QuadElem sq = z_sq.coeff(0);
  if (!sq.is_rational()) throw consistency_error("z^2 is not rational");
  Rat closed = rat_pow(Rat(form.d), form.m());
  if (form.m() % 2 == 1) closed = -closed;
  Rat dp = form.diag_product();
  closed *= dp * dp;
  if (sq.a() != closed)
    throw consistency_error("z^2 disagrees with its closed form");
  return {z, sq.a(), sq.a() != 0 && is_square(sq.a())};
}

std::string clifford_str(const CliffordElem& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << quad_str(c) << ")";
    Blade blade = b;
    while (blade) {
      int g = std::countr_zero(blade);
      os << "*e" << (g + 1);
      blade &= blade - 1;
    }
  }
  return os.str();
}

}  // namespace halftwist
