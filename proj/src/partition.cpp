#include "pglind/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <mutex>

#include "pglind/checked.hpp"
#include "pglind/error.hpp"

namespace pglind {

namespace {

void validate(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw ArgumentError("partition parts must be positive");
    if (i + 1 < parts.size() && parts[i] < parts[i + 1])
      throw ArgumentError("partition parts must be weakly decreasing");
  }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  validate(parts_);
  for (int x : parts_) size_ += x;
}

bool reverse_lex_less(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), std::greater<>{});
}

Partition transpose(const Partition& p) {
  std::vector<int> out;
  if (p.empty()) return Partition{};
  out.reserve(p[0]);
  for (int col = 1; col <= p[0]; ++col) {
    int height = 0;
    for (int x : p) {
      if (x < col) break;
      ++height;
    }
    out.push_back(height);
  }
  return Partition(std::move(out));
}

int part_multiplicity(const Partition& p, int i) {
  if (i < 1) throw ArgumentError("part_multiplicity: index must be >= 1");
  return static_cast<int>(std::count(p.begin(), p.end(), i));
}

bool is_even(const Partition& p) {
  return std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 0; });
}

bool transpose_is_even(const Partition& p) {
  // Parts are sorted, so equal parts form runs.
  for (std::size_t i = 0; i < p.parts().size();) {
    std::size_t j = i;
    while (j < p.parts().size() && p[j] == p[i]) ++j;
    if ((j - i) % 2 != 0) return false;
    i = j;
  }
  return true;
}

LengthStats length_stats(const Partition& p) {
  LengthStats s;
  for (int x : p) {
    ++s.ell;
    if (x % 2 == 1) {
      ++s.ell1;
    } else {
      ++s.ell0;
      if (x % 4 == 0)
        ++s.ell0mod4;
      else
        ++s.ell2mod4;
    }
  }
  return s;
}

std::uint64_t centralizer_order(const Partition& p) {
  std::uint64_t z = 1;
  std::size_t i = 0;
  while (i < p.parts().size()) {
    std::size_t j = i;
    while (j < p.parts().size() && p[j] == p[i]) ++j;
    const auto part = static_cast<std::uint64_t>(p[i]);
    for (std::uint64_t k = 1; k <= j - i; ++k) {
      z = checked::umul(z, part, "centralizer order");
      z = checked::umul(z, k, "centralizer order");
    }
    i = j;
  }
  return z;
}

int sign(const Partition& p) { return length_stats(p).ell0 % 2 == 0 ? 1 : -1; }

namespace {

// Calls f(part, multiplicity) for each distinct part.
template <typename F>
void for_each_run(const Partition& p, F&& f) {
  std::size_t i = 0;
  while (i < p.parts().size()) {
    std::size_t j = i;
    while (j < p.parts().size() && p[j] == p[i]) ++j;
    f(p[i], static_cast<int>(j - i));
    i = j;
  }
}

}  // namespace

std::int64_t multiplicity_product(const Partition& p) {
  std::int64_t r = 1;
  for_each_run(p, [&](int, int m) { r *= m + 1; });
  return r;
}

std::int64_t even_multiplicity_product(const Partition& p) {
  std::int64_t r = 1;
  for_each_run(p, [&](int part, int m) {
    if (part % 2 == 0) r *= m + 1;
  });
  return r;
}

bool odd_multiplicities_even(const Partition& p) {
  bool ok = true;
  for_each_run(p, [&](int part, int m) {
    if (part % 2 == 1 && m % 2 == 1) ok = false;
  });
  return ok;
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    generate(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions_of(int m, int bound) {
  if (m < 0) throw ArgumentError("partitions_of: negative size");
  if (m > bound)
    throw CapacityError("partitions_of: size " + std::to_string(m) + " exceeds bound " +
                        std::to_string(bound));
  static std::mutex mutex;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(m, m, prefix, out);
  return cache.emplace(m, std::move(out)).first->second;
}

std::string to_string(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  s += ']';
  return s;
}

Partition parse_partition(std::string_view text) {
  auto skip_ws = [&](std::size_t& i) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  std::size_t i = 0;
  skip_ws(i);
  if (i >= text.size() || text[i] != '[') throw ArgumentError("partition must start with '['");
  ++i;
  std::vector<int> parts;
  skip_ws(i);
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip_ws(i);
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc{} || ptr == text.data() + i)
        throw ArgumentError("expected a positive integer in partition '" + std::string(text) + "'");
      i = static_cast<std::size_t>(ptr - text.data());
      parts.push_back(value);
      skip_ws(i);
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      throw ArgumentError("expected ',' or ']' in partition '" + std::string(text) + "'");
    }
  }
  skip_ws(i);
  if (i != text.size()) throw ArgumentError("trailing characters after partition");
  return Partition(std::move(parts));
}

}  // namespace pglind
