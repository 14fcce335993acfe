#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vqh {

/// Largest supported dimension for graph construction. Exhaustive
/// algorithms (all-pairs metrics, the search oracle) bound themselves
/// separately and far lower.
inline constexpr int kMaxDimension = 26;

enum class Family { VQ, Q, CQ };
enum class EdgeClass { Normal, Crossing };
enum class Half { Left, Right };

Family parse_family(std::string_view name);  // "vq" | "q" | "cq", case-insensitive
std::string_view family_name(Family f);      // "VQ" | "Q" | "CQ"

/// An n-bit vertex label. Bit positions run 1..n; position n is the most
/// significant and is printed first, so the label string reads exactly as
/// written on the vertex. Position i is stored at binary weight 2^(i-1).
class VertexLabel {
 public:
  VertexLabel() = default;
  VertexLabel(int dimension, std::uint32_t bits);

  /// Parses an MSB-first binary string; the dimension is the string length.
  static VertexLabel parse(std::string_view text);

  int dimension() const { return dim_; }
  std::uint32_t bits() const { return bits_; }

  /// Value of bit at position `pos` (1-indexed from the low end).
  bool bit(int pos) const;
  VertexLabel flipped(int pos) const;

  std::string str() const;

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
  friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;

 private:
  int dim_ = 0;
  std::uint32_t bits_ = 0;
};

/// The bit-pair substitution that governs matching edges at levels that are
/// multiples of 3: a pair (bit m-1, bit m-2) maps to its partner pair on the
/// other side of the matching. Pairs 00 and 01 are fixed; 10 and 11 swap.
inline constexpr std::array<unsigned, 4> kPairPartner = {0b00, 0b01, 0b11, 0b10};

constexpr unsigned pair_partner(unsigned pair) { return kPairPartner[pair & 3u]; }
constexpr bool pair_allowed(unsigned xp, unsigned yp) { return pair_partner(xp) == (yp & 3u); }

/// Highest bit position at which two labels differ. Requires x != y and
/// equal dimensions.
int edge_level(const VertexLabel& x, const VertexLabel& y);

bool vq_adjacent(const VertexLabel& x, const VertexLabel& y);
bool q_adjacent(const VertexLabel& x, const VertexLabel& y);
bool cq_adjacent(const VertexLabel& x, const VertexLabel& y);

/// The unique neighbor of x whose highest differing position is `level`.
/// Involution: applying it twice returns x.
VertexLabel transversal_neighbor(const VertexLabel& x, int level);
VertexLabel q_neighbor(const VertexLabel& x, int level);
VertexLabel cq_neighbor(const VertexLabel& x, int level);

/// All n neighbors of x, ascending by label value.
std::vector<VertexLabel> vq_neighbors(const VertexLabel& x);

struct EdgeDescriptor {
  VertexLabel a, b;  // canonical order: a.bits() < b.bits()
  int level = 0;
  EdgeClass cls = EdgeClass::Normal;
};

/// Level and class of an edge. Throws std::invalid_argument if the pair is
/// not adjacent.
EdgeDescriptor classify_edge(const VertexLabel& x, const VertexLabel& y);

Half half_of(const VertexLabel& x);
bool in_half(const VertexLabel& x, Half h);

/// Immutable adjacency view of one of the three families. Neighbors are
/// computed arithmetically; nothing is materialized, so large n is cheap.
class Graph {
 public:
  Graph(Family family, int n);

  Family family() const { return family_; }
  int n() const { return n_; }
  std::uint64_t vertex_count() const { return std::uint64_t{1} << n_; }
  std::uint64_t edge_count() const;  // all three families are n-regular

  VertexLabel label(std::uint32_t bits) const { return VertexLabel(n_, bits); }
  VertexLabel neighbor(const VertexLabel& x, int level) const;
  std::vector<VertexLabel> neighbors(const VertexLabel& x) const;
  bool adjacent(const VertexLabel& x, const VertexLabel& y) const;

  /// Visits every edge exactly once as (x, y) with x < y, lines ordered by
  /// ascending x then ascending y.
  template <typename Fn>
  void for_each_edge(Fn&& fn) const {
    for (std::uint64_t v = 0; v < vertex_count(); ++v) {
      const VertexLabel x = label(static_cast<std::uint32_t>(v));
      auto ns = neighbors(x);
      for (const VertexLabel& y : ns) {
        if (y.bits() > x.bits()) fn(x, y);
      }
    }
  }

 private:
  Family family_;
  int n_;
};

}  // namespace vqh
