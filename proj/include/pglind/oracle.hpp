#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pglind/formulas.hpp"
#include "pglind/params.hpp"

namespace pglind {

struct GroupOrders {
  std::uint64_t q = 0;
  int n = 0;
  BigInt gl, sp, o_plus, o_minus;
  BigInt pgl, pgsp, pgo_plus, pgo_minus;
  BigInt index_pgsp, index_pgo_plus, index_pgo_minus;

  const BigInt& order(Subgroup s) const;
  const BigInt& index(Subgroup s) const;
};

// Closed-form orders; n must be even.
GroupOrders orders(std::uint64_t q, int n);

// Degree of the irreducible character with the given label (any label with
// Pi arbitrary; the degree is that of the GL_n character).
BigInt degree(const MultiPartition& label);

inline constexpr std::uint64_t kMaxProjectiveOrder = 1'000'000;

using Matrix = std::vector<int>;  // row-major n x n, entries in [0, p)

// PGL_n(F_p) for p prime, elements stored as matrices scaled so the first
// nonzero entry (row-major) is 1.
class ProjectiveGroup {
public:
  // ArgumentError unless p is an odd prime and n >= 1; CapacityError past
  // kMaxProjectiveOrder elements.
  ProjectiveGroup(std::uint64_t p, int n);

  std::uint64_t p() const { return p_; }
  int n() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const Matrix& element(std::size_t i) const { return elements_[i]; }
  const std::vector<std::size_t>& generators() const { return generators_; }
  std::size_t identity() const { return 0; }

  std::size_t index_of(const Matrix& normalized) const;
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;

  Matrix mul(const Matrix& a, const Matrix& b) const;
  Matrix transpose(const Matrix& a) const;
  Matrix normalize(Matrix a) const;
  std::uint64_t key(const Matrix& a) const;
  std::int64_t det(Matrix a) const;

private:
  std::uint64_t p_;
  int n_;
  std::vector<Matrix> elements_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<std::size_t> generators_;
};

enum class FormKind { Skew, SymmetricPlus, SymmetricMinus };
std::string to_string(FormKind k);
Subgroup stabilizer_subgroup(FormKind k);

struct FormOrbit {
  FormKind kind;
  Matrix representative;  // normalized Gram matrix
  std::uint64_t size = 0;
  std::uint64_t stabilizer_order = 0;
};

// Nondegenerate symmetric and skew forms modulo scalars, split into orbits
// under g . h = g h g^t. Orbits are sorted by kind.
std::vector<FormOrbit> enumerate_forms(const ProjectiveGroup& g);
std::vector<FormOrbit> enumerate_forms(std::uint64_t p, int n);

// Elements of G fixing the form class of h.
std::vector<std::size_t> form_stabilizer(const ProjectiveGroup& g, const Matrix& h);

// A small generating set of the subgroup given by its element list.
std::vector<std::size_t> generating_set(const ProjectiveGroup& g, const std::vector<std::size_t>& subgroup);

// Number of double cosets H1 \ G / H2 for the stabilizers of the chosen forms.
std::uint64_t double_cosets(const ProjectiveGroup& g, Subgroup h1, Subgroup h2);
std::uint64_t double_cosets(std::uint64_t p, int n, Subgroup h1, Subgroup h2);

std::uint64_t conjugacy_class_count(const ProjectiveGroup& g);
std::uint64_t conjugacy_class_count(std::uint64_t p, int n);

}  // namespace pglind
