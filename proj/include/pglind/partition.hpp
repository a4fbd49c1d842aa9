#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace pglind {

// A weakly decreasing sequence of positive integers. Multiplicity views
// (m_i, transpose, length statistics) are computed on demand.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  // Plain lexicographic order on the part sequence. The enumeration order
  // used everywhere else is the reverse of this (see reverse_lex_less).
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Reverse lexicographic order: (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1).
bool reverse_lex_less(const Partition& a, const Partition& b);

struct LengthStats {
  int ell = 0;       // number of parts
  int ell0 = 0;      // even parts
  int ell1 = 0;      // odd parts
  int ell0mod4 = 0;  // parts = 0 mod 4
  int ell2mod4 = 0;  // parts = 2 mod 4

  friend bool operator==(const LengthStats&, const LengthStats&) = default;
};

Partition transpose(const Partition& p);

// m_i(p), the number of parts equal to i.
int part_multiplicity(const Partition& p, int i);

// True iff every part is even.
bool is_even(const Partition& p);

// True iff the transpose is even, i.e. every m_i(p) is even.
bool transpose_is_even(const Partition& p);

LengthStats length_stats(const Partition& p);

// z_p = prod_i i^{m_i} m_i!, the order of the centralizer of a permutation
// of cycle type p. Throws CapacityError if it does not fit in 64 bits.
std::uint64_t centralizer_order(const Partition& p);

// Sign of a permutation of cycle type p: (-1)^{number of even parts}.
int sign(const Partition& p);

// prod_i (m_i(p) + 1) over all i >= 1.
std::int64_t multiplicity_product(const Partition& p);

// prod_i (m_{2i}(p) + 1), even part sizes only.
std::int64_t even_multiplicity_product(const Partition& p);

// True iff every odd part size occurs an even number of times.
bool odd_multiplicities_even(const Partition& p);

inline constexpr int kDefaultPartitionBound = 30;

// All partitions of m in reverse lexicographic order. The list is built once
// per m and shared; the reference stays valid for the life of the program.
// Throws CapacityError when m exceeds `bound`.
const std::vector<Partition>& partitions_of(int m, int bound = kDefaultPartitionBound);

// Text form: "[3,1,1]", "[]".
std::string to_string(const Partition& p);
// Parses the text form; throws ArgumentError on malformed input.
Partition parse_partition(std::string_view text);

}  // namespace pglind
