#include "vqh/topology.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace vqh {

namespace {

std::uint32_t low_mask(int count) {
  return count <= 0 ? 0u : (count >= 32 ? ~0u : (1u << count) - 1u);
}

// Bits (m-1, m-2) of x as a two-bit value, high bit first. Requires m >= 3.
unsigned level_pair(std::uint32_t x, int m) { return (x >> (m - 3)) & 3u; }

void require_same_dim(const VertexLabel& x, const VertexLabel& y) {
  if (x.dimension() != y.dimension()) {
    throw std::invalid_argument("vertex labels have different dimensions");
  }
  if (x.dimension() == 0) throw std::invalid_argument("uninitialized vertex label");
}

}  // namespace

Family parse_family(std::string_view name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "vq") return Family::VQ;
  if (s == "q") return Family::Q;
  if (s == "cq") return Family::CQ;
  throw std::invalid_argument("unknown family: " + std::string(name));
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::VQ: return "VQ";
    case Family::Q: return "Q";
    case Family::CQ: return "CQ";
  }
  throw std::logic_error("bad family value");
}

VertexLabel::VertexLabel(int dimension, std::uint32_t bits) : dim_(dimension), bits_(bits) {
  if (dimension < 1 || dimension > kMaxDimension) {
    throw std::out_of_range("vertex dimension out of range");
  }
  if (dimension < 32 && (bits >> dimension) != 0) {
    throw std::invalid_argument("label bits exceed dimension");
  }
}

VertexLabel VertexLabel::parse(std::string_view text) {
  if (text.empty() || text.size() > static_cast<std::size_t>(kMaxDimension)) {
    throw std::invalid_argument("label must have 1.." + std::to_string(kMaxDimension) +
                                " binary digits");
  }
  std::uint32_t bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("label must be a binary string");
    bits = (bits << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return VertexLabel(static_cast<int>(text.size()), bits);
}

bool VertexLabel::bit(int pos) const {
  if (pos < 1 || pos > dim_) throw std::out_of_range("bit position out of range");
  return (bits_ >> (pos - 1)) & 1u;
}

VertexLabel VertexLabel::flipped(int pos) const {
  if (pos < 1 || pos > dim_) throw std::out_of_range("bit position out of range");
  VertexLabel out = *this;
  out.bits_ ^= 1u << (pos - 1);
  return out;
}

std::string VertexLabel::str() const {
  std::string out(static_cast<std::size_t>(dim_), '0');
  for (int i = 0; i < dim_; ++i) {
    if ((bits_ >> i) & 1u) out[static_cast<std::size_t>(dim_ - 1 - i)] = '1';
  }
  return out;
}

int edge_level(const VertexLabel& x, const VertexLabel& y) {
  require_same_dim(x, y);
  std::uint32_t diff = x.bits() ^ y.bits();
  if (diff == 0) throw std::invalid_argument("labels are identical");
  return std::bit_width(diff);
}

bool vq_adjacent(const VertexLabel& x, const VertexLabel& y) {
  require_same_dim(x, y);
  std::uint32_t diff = x.bits() ^ y.bits();
  if (diff == 0) throw std::invalid_argument("labels are identical");
  int m = std::bit_width(diff);
  if (m % 3 != 0) return diff == (1u << (m - 1));
  // Level is a multiple of 3: bits below m-2 must agree and the (m-1, m-2)
  // pairs must map to each other under the pair substitution.
  if ((diff & low_mask(m - 3)) != 0) return false;
  return pair_allowed(level_pair(x.bits(), m), level_pair(y.bits(), m));
}

bool q_adjacent(const VertexLabel& x, const VertexLabel& y) {
  require_same_dim(x, y);
  std::uint32_t diff = x.bits() ^ y.bits();
  if (diff == 0) throw std::invalid_argument("labels are identical");
  return std::has_single_bit(diff);
}

bool cq_adjacent(const VertexLabel& x, const VertexLabel& y) {
  require_same_dim(x, y);
  std::uint32_t diff = x.bits() ^ y.bits();
  if (diff == 0) throw std::invalid_argument("labels are identical");
  int j = std::bit_width(diff);  // bits above j already equal, x_j != y_j
  if (j % 2 == 0 && ((diff >> (j - 2)) & 1u)) return false;  // x_{j-1} must equal y_{j-1}
  int pairs = (j + 1) / 2 - 1;
  for (int i = 1; i <= pairs; ++i) {
    unsigned xp = (x.bits() >> (2 * i - 2)) & 3u;
    unsigned yp = (y.bits() >> (2 * i - 2)) & 3u;
    if (!pair_allowed(xp, yp)) return false;
  }
  return true;
}

VertexLabel transversal_neighbor(const VertexLabel& x, int level) {
  if (level < 1 || level > x.dimension()) throw std::out_of_range("level out of range");
  std::uint32_t bits = x.bits() ^ (1u << (level - 1));
  if (level % 3 == 0 && ((x.bits() >> (level - 2)) & 1u)) {
    bits ^= 1u << (level - 3);  // the pair twist also flips bit level-2
  }
  return VertexLabel(x.dimension(), bits);
}

VertexLabel q_neighbor(const VertexLabel& x, int level) {
  if (level < 1 || level > x.dimension()) throw std::out_of_range("level out of range");
  return x.flipped(level);
}

VertexLabel cq_neighbor(const VertexLabel& x, int level) {
  if (level < 1 || level > x.dimension()) throw std::out_of_range("level out of range");
  std::uint32_t bits = x.bits() ^ (1u << (level - 1));
  int pairs = (level + 1) / 2 - 1;
  for (int i = 1; i <= pairs; ++i) {
    unsigned xp = (x.bits() >> (2 * i - 2)) & 3u;
    bits = (bits & ~(3u << (2 * i - 2))) | (pair_partner(xp) << (2 * i - 2));
  }
  return VertexLabel(x.dimension(), bits);
}

std::vector<VertexLabel> vq_neighbors(const VertexLabel& x) {
  std::vector<VertexLabel> out;
  out.reserve(static_cast<std::size_t>(x.dimension()));
  for (int m = 1; m <= x.dimension(); ++m) out.push_back(transversal_neighbor(x, m));
  std::sort(out.begin(), out.end());
  return out;
}

EdgeDescriptor classify_edge(const VertexLabel& x, const VertexLabel& y) {
  if (!vq_adjacent(x, y)) throw std::invalid_argument("not an edge of the varietal hypercube");
  EdgeDescriptor e;
  e.level = edge_level(x, y);
  e.a = x.bits() < y.bits() ? x : y;
  e.b = x.bits() < y.bits() ? y : x;
  bool crossing = e.level % 3 == 0 && ((x.bits() >> (e.level - 2)) & 1u);
  e.cls = crossing ? EdgeClass::Crossing : EdgeClass::Normal;
  return e;
}

Half half_of(const VertexLabel& x) {
  return x.bit(x.dimension()) ? Half::Right : Half::Left;
}

bool in_half(const VertexLabel& x, Half h) { return half_of(x) == h; }

Graph::Graph(Family family, int n) : family_(family), n_(n) {
  if (n < 1 || n > kMaxDimension) throw std::out_of_range("graph dimension out of range");
}

std::uint64_t Graph::edge_count() const {
  return static_cast<std::uint64_t>(n_) << (n_ - 1);
}

VertexLabel Graph::neighbor(const VertexLabel& x, int level) const {
  if (x.dimension() != n_) throw std::invalid_argument("label dimension does not match graph");
  switch (family_) {
    case Family::VQ: return transversal_neighbor(x, level);
    case Family::Q: return q_neighbor(x, level);
    case Family::CQ: return cq_neighbor(x, level);
  }
  throw std::logic_error("bad family value");
}

std::vector<VertexLabel> Graph::neighbors(const VertexLabel& x) const {
  std::vector<VertexLabel> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int m = 1; m <= n_; ++m) out.push_back(neighbor(x, m));
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::adjacent(const VertexLabel& x, const VertexLabel& y) const {
  if (x.dimension() != n_ || y.dimension() != n_) {
    throw std::invalid_argument("label dimension does not match graph");
  }
  switch (family_) {
    case Family::VQ: return vq_adjacent(x, y);
    case Family::Q: return q_adjacent(x, y);
    case Family::CQ: return cq_adjacent(x, y);
  }
  throw std::logic_error("bad family value");
}

}  // namespace vqh
