#pragma once

#include <map>
#include <string>
#include <vector>

#include "halftwist/field.hpp"

namespace halftwist {

struct BidegreeKey {
  int embedding;
  int p;
  int q;
  auto operator<=>(const BidegreeKey&) const = default;
};

struct TableEntry {
  int embedding;
  int p;
  int q;
  long dim;
};

// A CM-type Hodge structure up to isomorphism of its character data: for
// each embedding of K, the multiplicities of the bidegrees (p, q) in the
// corresponding eigenspace of the complexification.
class HodgeTable {
 public:
  HodgeTable(CMType cm_type, int weight, const std::vector<TableEntry>& entries);

  static HodgeTable empty(CMType cm_type, int weight);
  // Rank one per embedding, all in bidegree (0, 0), weight 0.
  static HodgeTable trivial(CMType cm_type);
  // Weight-2 structure over an imaginary quadratic field (r = 1): a single
  // (2,0) line on the CM-type side plus (1,1) with multiplicity m-1.
  static HodgeTable weight2_generic(long m_dim);

  const CMFieldDescriptor& field() const { return cm_type_.field(); }
  const CMType& cm_type() const { return cm_type_; }
  int weight() const { return weight_; }
  bool effective() const { return effective_; }
  const std::map<BidegreeKey, long>& entries() const { return mult_; }

  long dim_at(int embedding, int p, int q) const;  // 0 when absent
  long embedding_total(int embedding) const;
  long dim_K() const;  // common per-embedding total (0 for the empty table)
  long dim_Q() const;  // total over all embeddings

  bool operator==(const HodgeTable&) const = default;

 private:
  CMType cm_type_;
  int weight_ = 0;
  bool effective_ = true;
  std::map<BidegreeKey, long> mult_;
};

struct ValidationIssue {
  std::string check;
  std::string detail;
  bool warning = false;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool passed() const;  // warnings do not fail
  std::string str() const;
};

ValidationReport validate(const HodgeTable& t);
void require_valid(const HodgeTable& t);  // throws input_error on failure

// True iff one positive half-twist step is admissible, i.e. no chosen
// embedding carries a (0, k) eigenspace.
bool half_twist_admissible(const HodgeTable& t);

// V_{n/2}.  n = -1 is the negative half twist, of weight k+1; positive n
// applies the inverse shifts one admissible step at a time.
HodgeTable half_twist(const HodgeTable& t, int n);

// V(n): entries move (p, q) -> (p-n, q-n), weight k-2n.  Clears the
// effective flag when a bidegree goes negative.
HodgeTable tate_twist(const HodgeTable& t, int n);

struct TensorHalfParts {
  HodgeTable diag;  // where x(x)1 and 1(x)x agree; equals half_twist(t, -1)
  HodgeTable conj;  // where x(x)1 acts as 1(x)conj(x)
};

// The two eigen-submodules of V (x)_Q K_{-1/2}, same CM-type.
TensorHalfParts tensor_K_halfmodule(const HodgeTable& t);

// i-th exterior power over K, taken per embedding; weight i*k and
// per-embedding dimension C(m, i).  Empty table when i > m.
HodgeTable ext_power_K(const HodgeTable& t, long i);

}  // namespace halftwist
