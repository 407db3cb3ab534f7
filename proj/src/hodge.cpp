#include "halftwist/hodge.hpp"

#include <sstream>

#include "halftwist/errors.hpp"

namespace halftwist {

HodgeTable::HodgeTable(CMType cm_type, int weight,
                       const std::vector<TableEntry>& entries)
    : cm_type_(std::move(cm_type)), weight_(weight) {
  int n = cm_type_.field().degree();
  for (const TableEntry& e : entries) {
    if (e.embedding < 1 || e.embedding > n)
      throw input_error("table entry embedding out of range");
    if (e.dim < 0) throw input_error("table entry dimension negative");
    if (e.dim == 0) continue;
    mult_[{e.embedding, e.p, e.q}] += e.dim;
  }
  effective_ = true;
  for (const auto& [key, dim] : mult_)
    if (key.p < 0 || key.q < 0) effective_ = false;
}

HodgeTable HodgeTable::empty(CMType cm_type, int weight) {
  return HodgeTable(std::move(cm_type), weight, {});
}

HodgeTable HodgeTable::trivial(CMType cm_type) {
  std::vector<TableEntry> entries;
  for (int j = 1; j <= cm_type.field().degree(); ++j)
    entries.push_back({j, 0, 0, 1});
  return HodgeTable(std::move(cm_type), 0, entries);
}

HodgeTable HodgeTable::weight2_generic(long m_dim) {
  if (m_dim < 1) throw input_error("weight2_generic needs m >= 1");
  CMType sigma = CMType::standard({1});
  std::vector<TableEntry> entries = {{1, 2, 0, 1}, {2, 0, 2, 1}};
  if (m_dim > 1) {
    entries.push_back({1, 1, 1, m_dim - 1});
    entries.push_back({2, 1, 1, m_dim - 1});
  }
  return HodgeTable(std::move(sigma), 2, entries);
}

long HodgeTable::dim_at(int embedding, int p, int q) const {
  auto it = mult_.find({embedding, p, q});
  return it == mult_.end() ? 0 : it->second;
}

long HodgeTable::embedding_total(int embedding) const {
  long total = 0;
  for (const auto& [key, dim] : mult_)
    if (key.embedding == embedding) total += dim;
  return total;
}

long HodgeTable::dim_K() const { return embedding_total(1); }

long HodgeTable::dim_Q() const {
  long total = 0;
  for (const auto& [key, dim] : mult_) total += dim;
  return total;
}

bool ValidationReport::passed() const {
  for (const auto& issue : issues)
    if (!issue.warning) return false;
  return true;
}

std::string ValidationReport::str() const {
  std::ostringstream os;
  if (issues.empty()) {
    os << "all invariants hold\n";
    return os.str();
  }
  for (const auto& issue : issues)
    os << (issue.warning ? "warning" : "FAIL") << " [" << issue.check << "] "
       << issue.detail << "\n";
  return os.str();
}

namespace {

std::string entry_str(const BidegreeKey& k, long dim) {
  std::ostringstream os;
  os << "embedding " << k.embedding << ", (p,q)=(" << k.p << "," << k.q
     << "), dim " << dim;
  return os.str();
}

}  // namespace

ValidationReport validate(const HodgeTable& t) {
  ValidationReport report;
  const auto& field = t.field();

  for (const auto& [key, dim] : t.entries()) {
    if (key.p + key.q != t.weight())
      report.issues.push_back(
          {"weight", entry_str(key, dim) + " has p+q != " +
                         std::to_string(t.weight())});
  }

  for (const auto& [key, dim] : t.entries()) {
    long mirror = t.dim_at(field.conj(key.embedding), key.q, key.p);
    if (mirror != dim)
      report.issues.push_back(
          {"conjugation-symmetry",
           entry_str(key, dim) + " vs mirror dim " + std::to_string(mirror)});
  }

  long first = t.embedding_total(1);
  for (int j = 2; j <= field.degree(); ++j) {
    long total = t.embedding_total(j);
    if (total != first)
      report.issues.push_back(
          {"equal-multiplicity", "embedding " + std::to_string(j) +
                                     " has total " + std::to_string(total) +
                                     ", embedding 1 has " +
                                     std::to_string(first)});
  }

  if (!t.effective()) {
    for (const auto& [key, dim] : t.entries())
      if (key.p < 0 || key.q < 0)
        report.issues.push_back(
            {"effectivity", entry_str(key, dim) + " has a negative bidegree",
             true});
  }

  return report;
}

void require_valid(const HodgeTable& t) {
  ValidationReport report = validate(t);
  if (!report.passed()) throw input_error("invalid table:\n" + report.str());
}

bool half_twist_admissible(const HodgeTable& t) {
  for (int sigma : t.cm_type().chosen())
    if (t.dim_at(sigma, 0, t.weight()) != 0) return false;
  return true;
}

namespace {

HodgeTable shift_entries(const HodgeTable& t, int dp_sigma, int dq_sigma,
                         int dp_bar, int dq_bar, int new_weight) {
  std::vector<TableEntry> out;
  for (const auto& [key, dim] : t.entries()) {
    bool on_type = t.cm_type().contains(key.embedding);
    int dp = on_type ? dp_sigma : dp_bar;
    int dq = on_type ? dq_sigma : dq_bar;
    out.push_back({key.embedding, key.p + dp, key.q + dq, dim});
  }
  return HodgeTable(t.cm_type(), new_weight, out);
}

HodgeTable half_twist_step_neg(const HodgeTable& t) {
  return shift_entries(t, 1, 0, 0, 1, t.weight() + 1);
}

HodgeTable half_twist_step_pos(const HodgeTable& t) {
  for (int sigma : t.cm_type().chosen()) {
    if (t.dim_at(sigma, 0, t.weight()) != 0)
      throw admissibility_error(
          "positive half twist undefined: embedding " +
              std::to_string(sigma) + " carries a (0," +
              std::to_string(t.weight()) + ") eigenspace",
          sigma);
  }
  return shift_entries(t, -1, 0, 0, -1, t.weight() - 1);
}

}  // namespace

HodgeTable half_twist(const HodgeTable& t, int n) {
  require_valid(t);
  HodgeTable out = t;
  for (; n < 0; ++n) out = half_twist_step_neg(out);
  for (; n > 0; --n) out = half_twist_step_pos(out);
  return out;
}

HodgeTable tate_twist(const HodgeTable& t, int n) {
  require_valid(t);
  return shift_entries(t, -n, -n, -n, -n, t.weight() - 2 * n);
}

TensorHalfParts tensor_K_halfmodule(const HodgeTable& t) {
  require_valid(t);
  return {shift_entries(t, 1, 0, 0, 1, t.weight() + 1),
          shift_entries(t, 0, 1, 1, 0, t.weight() + 1)};
}

HodgeTable ext_power_K(const HodgeTable& t, long i) {
  require_valid(t);
  if (i < 0) throw input_error("exterior power index must be nonnegative");
  long m = t.dim_K();
  int new_weight = static_cast<int>(i) * t.weight();
  if (i > m) return HodgeTable::empty(t.cm_type(), new_weight);
  if (i == 0) return HodgeTable::trivial(t.cm_type());

  std::vector<TableEntry> out;
  for (int j = 1; j <= t.field().degree(); ++j) {
    // Coefficient of z^i in prod over entries of (1 + x^p y^q z)^dim,
    // tracked as maps (P, Q) -> count per z-degree.
    std::vector<std::map<std::pair<int, int>, long>> poly(i + 1);
    poly[0][{0, 0}] = 1;
    for (const auto& [key, dim] : t.entries()) {
      if (key.embedding != j) continue;
      std::vector<std::map<std::pair<int, int>, long>> next(i + 1);
      for (long deg = 0; deg <= i; ++deg) {
        for (const auto& [pq, count] : poly[deg]) {
          for (long take = 0; take + deg <= i && take <= dim; ++take) {
            long ways = binomial_long(dim, take);
            next[deg + take][{pq.first + static_cast<int>(take) * key.p,
                              pq.second + static_cast<int>(take) * key.q}] +=
                count * ways;
          }
        }
      }
      poly = std::move(next);
    }
    for (const auto& [pq, count] : poly[i])
      out.push_back({j, pq.first, pq.second, count});
  }
  return HodgeTable(t.cm_type(), new_weight, out);
}

}  // namespace halftwist
