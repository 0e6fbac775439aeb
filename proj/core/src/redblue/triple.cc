#include "petruska/redblue/triple.h"

#include <algorithm>
#include <bit>

#include "petruska/error.h"

namespace petruska::rb {

int popcount(VertexSet s) { return std::popcount(s); }

std::vector<int> vertices_of(VertexSet s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

VertexSet vertex_set(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) {
    if (v < 0 || v >= kMaxVertices) throw Error("vertex out of range");
    s |= bit(v);
  }
  return s;
}

std::string set_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : vertices_of(s)) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

Triple Triple::make(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw Error("negative vertex in triple");
  int v[3] = {a, b, c};
  std::sort(v, v + 3);
  if (v[0] == v[1] || v[1] == v[2]) throw Error("triple vertices must be distinct");
  return Triple{v[0], v[1], v[2]};
}

Triple Triple::from_index(std::size_t index) {
  // Greedy decoding of the combinatorial number system.
  int k = 2;
  while (choose3(k + 1) <= index) ++k;
  index -= choose3(k);
  int j = 1;
  while (choose2(j + 1) <= index) ++j;
  index -= choose2(j);
  return Triple{static_cast<int>(index), j, k};
}

std::string Triple::to_string() const {
  if (k < 10) {
    return std::string{static_cast<char>('0' + i), static_cast<char>('0' + j),
                       static_cast<char>('0' + k)};
  }
  return "{" + std::to_string(i) + "," + std::to_string(j) + "," +
         std::to_string(k) + "}";
}

TripleSet::TripleSet(int n) : n_(n), bits_(choose3(n)), words_((bits_ + 63) / 64) {
  if (n < 0 || n > kMaxVertices) throw Error("vertex count out of range");
}

std::size_t TripleSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

std::vector<Triple> TripleSet::to_vector() const {
  std::vector<Triple> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word) {
      out.push_back(Triple::from_index(w * 64 + std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

}  // namespace petruska::rb
