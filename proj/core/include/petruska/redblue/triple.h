#ifndef PETRUSKA_REDBLUE_TRIPLE_H_
#define PETRUSKA_REDBLUE_TRIPLE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace petruska::rb {

inline constexpr int kMaxVertices = 64;

// Bit v set iff vertex v is in the set.
using VertexSet = std::uint64_t;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
int popcount(VertexSet s);
std::vector<int> vertices_of(VertexSet s);
VertexSet vertex_set(const std::vector<int>& vs);
// "{0,1,4}"
std::string set_string(VertexSet s);

constexpr std::size_t choose2(std::size_t n) { return n * (n - 1) / 2; }
constexpr std::size_t choose3(std::size_t n) {
  return n * (n - 1) * (n - 2) / 6;
}

// Sorted triple i < j < k.
struct Triple {
  int i = 0;
  int j = 1;
  int k = 2;

  // Sorts the arguments; throws petruska::Error unless they are distinct
  // and non-negative.
  static Triple make(int a, int b, int c);
  static Triple from_index(std::size_t index);

  // Rank in the combinatorial number system: i + C(j,2) + C(k,3). Triples on
  // [0, n) occupy exactly the ranks [0, C(n,3)).
  std::size_t index() const { return i + choose2(j) + choose3(k); }
  VertexSet mask() const { return bit(i) | bit(j) | bit(k); }
  bool contains(int v) const { return v == i || v == j || v == k; }
  std::string to_string() const;  // "012" style for small labels

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Dynamic bitset over triple ranks.
class TripleSet {
 public:
  TripleSet() = default;
  explicit TripleSet(int n);

  int n() const { return n_; }
  std::size_t capacity() const { return bits_; }
  bool contains(const Triple& t) const {
    return t.k < n_ && test(t.index());
  }
  bool test(std::size_t index) const {
    return (words_[index >> 6] >> (index & 63)) & 1;
  }
  void insert(const Triple& t) { set(t.index()); }
  void set(std::size_t index) { words_[index >> 6] |= std::uint64_t{1} << (index & 63); }
  void erase(const Triple& t) {
    std::size_t x = t.index();
    words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
  }
  std::size_t count() const;
  // Members in increasing rank order.
  std::vector<Triple> to_vector() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const TripleSet&, const TripleSet&) = default;

 private:
  int n_ = 0;
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace petruska::rb

#endif  // PETRUSKA_REDBLUE_TRIPLE_H_
