#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace matquot {

// A subset of a ground set {0, ..., n-1} with n <= 63, stored as a bitmask.
using ElemSet = std::uint64_t;

constexpr int kMaxGroundSet = 63;

constexpr ElemSet full_set(int n) {
  return n == 0 ? 0 : (~ElemSet{0} >> (64 - n));
}

constexpr ElemSet single(int e) { return ElemSet{1} << e; }

constexpr bool contains(ElemSet s, int e) { return (s >> e) & 1; }

constexpr bool subset_of(ElemSet a, ElemSet b) { return (a & ~b) == 0; }

constexpr int set_size(ElemSet s) { return std::popcount(s); }

inline std::vector<int> set_elements(ElemSet s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

inline ElemSet set_from_elements(const std::vector<int>& elems) {
  ElemSet s = 0;
  for (int e : elems) s |= single(e);
  return s;
}

// Removes the elements of `removed` and packs the remaining bits down,
// preserving their relative order.
inline ElemSet compress_set(ElemSet s, ElemSet removed) {
  ElemSet out = 0;
  int pos = 0;
  for (int i = 0; i < 64; ++i) {
    if (contains(removed, i)) continue;
    if (contains(s, i)) out |= single(pos);
    ++pos;
  }
  return out;
}

// Inverse of compress_set: re-inserts gaps at the positions of `removed`.
inline ElemSet expand_set(ElemSet s, ElemSet removed) {
  ElemSet out = 0;
  int pos = 0;
  for (int i = 0; i < 64; ++i) {
    if (contains(removed, i)) continue;
    if (contains(s, pos)) out |= single(i);
    ++pos;
  }
  return out;
}

// Enumerates all k-subsets of {0,..,n-1} in lexicographic order of their
// sorted element tuples (equivalently colex-compatible Gosper order is not
// used; this order matches sorted-tuple lex).
inline std::vector<ElemSet> k_subsets(int n, int k) {
  std::vector<ElemSet> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(set_from_elements(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

inline std::string set_to_string(ElemSet s) {
  std::string out = "{";
  bool first = true;
  for (int e : set_elements(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace matquot
