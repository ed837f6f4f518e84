#pragma once

// Standard lattice blocks <a>, U, A_n, D_n, E_6/E_7/E_8 with integer
// scalings, and multisets of them ("named decompositions") with a small
// string grammar:
//
//   block := "U" | "A"n | "D"n | "E"n | "<" int ">"
//   term  := block ["(" int ")"] ["^" int]
//   expr  := term ("+" term)*
//
// e.g. "U^3 + E8(-1)^2", "<2> + U^5 + E8(-1)^4".

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "primlat/lattice.hpp"
#include "primlat/matrix.hpp"
#include "primlat/numeric.hpp"

namespace primlat {

enum class BlockKind { diag, hyperbolic, a_n, d_n, e_n };

struct Block {
  BlockKind kind = BlockKind::diag;
  Integer param = 0;  // diagonal entry for diag, index n for A/D/E, unused for U
  Integer scale = 1;
  int multiplicity = 1;

  friend bool operator==(const Block&, const Block&) = default;
};

inline long block_rank(const Block& b) {
  switch (b.kind) {
    case BlockKind::diag: return 1;
    case BlockKind::hyperbolic: return 2;
    default: return static_cast<long>(b.param);
  }
}

inline void validate_block(const Block& b) {
  if (b.scale == 0) fail(errc::zero_scale, "block scale must be nonzero");
  if (b.multiplicity < 1) fail(errc::unknown_block, "block multiplicity must be >= 1");
  switch (b.kind) {
    case BlockKind::diag:
      if (b.param == 0) fail(errc::unknown_block, "<0> is degenerate");
      break;
    case BlockKind::hyperbolic:
      break;
    case BlockKind::a_n:
      if (b.param < 1) fail(errc::unknown_block, "A_n requires n >= 1");
      break;
    case BlockKind::d_n:
      if (b.param < 4) fail(errc::unknown_block, "D_n requires n >= 4");
      break;
    case BlockKind::e_n:
      if (b.param < 6 || b.param > 8) fail(errc::unknown_block, "E_n requires n in {6,7,8}");
      break;
  }
}

// Gram matrix of a single unscaled block. E8 uses the Coxeter matrix with
// the branch node in position 2 attached to node 4; E6/E7 are its leading
// principal blocks, A_n is the tridiagonal 2/-1 chain and D_n the chain
// with node n attached to node n-2.
inline IMat block_gram(BlockKind kind, const Integer& param) {
  switch (kind) {
    case BlockKind::diag: {
      IMat g(1, 1);
      g(0, 0) = param;
      return g;
    }
    case BlockKind::hyperbolic: {
      IMat g(2, 2);
      g(0, 1) = g(1, 0) = 1;
      return g;
    }
    case BlockKind::a_n: {
      std::size_t n = static_cast<std::size_t>(param);
      IMat g(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        g(i, i) = 2;
        if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = -1;
      }
      return g;
    }
    case BlockKind::d_n: {
      std::size_t n = static_cast<std::size_t>(param);
      IMat g(n, n);
      for (std::size_t i = 0; i < n; ++i) g(i, i) = 2;
      for (std::size_t i = 0; i + 2 < n; ++i) g(i, i + 1) = g(i + 1, i) = -1;
      g(n - 3, n - 1) = g(n - 1, n - 3) = -1;
      return g;
    }
    case BlockKind::e_n: {
      std::size_t n = static_cast<std::size_t>(param);
      IMat g(n, n);
      for (std::size_t i = 0; i < n; ++i) g(i, i) = 2;
      auto link = [&](std::size_t i, std::size_t j) {
        if (i < n && j < n) g(i, j) = g(j, i) = -1;
      };
      link(0, 2);
      link(2, 3);
      link(1, 3);
      link(3, 4);
      link(4, 5);
      link(5, 6);
      link(6, 7);
      return g;
    }
  }
  fail(errc::unknown_block, "unreachable block kind");
}

namespace detail {

// Sort key: diagonal blocks first (ascending entry), then U, A, D, E
// ascending by index, then ascending scale.
inline std::tuple<int, Integer, Integer> block_key(const Block& b) {
  int k = 0;
  switch (b.kind) {
    case BlockKind::diag: k = 0; break;
    case BlockKind::hyperbolic: k = 1; break;
    case BlockKind::a_n: k = 2; break;
    case BlockKind::d_n: k = 3; break;
    case BlockKind::e_n: k = 4; break;
  }
  return {k, b.param, b.scale};
}

}  // namespace detail

class NamedDecomposition {
 public:
  NamedDecomposition() = default;

  explicit NamedDecomposition(std::vector<Block> blocks) {
    for (auto& b : blocks) validate_block(b);
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
      return detail::block_key(a) < detail::block_key(b);
    });
    for (const Block& b : blocks) {
      if (!blocks_.empty()) {
        Block& last = blocks_.back();
        if (last.kind == b.kind && last.param == b.param && last.scale == b.scale) {
          last.multiplicity += b.multiplicity;
          continue;
        }
      }
      blocks_.push_back(b);
    }
  }

  const std::vector<Block>& blocks() const { return blocks_; }
  bool empty() const { return blocks_.empty(); }

  long rank() const {
    long r = 0;
    for (const Block& b : blocks_) r += block_rank(b) * b.multiplicity;
    return r;
  }

  std::string str() const {
    std::string out;
    for (const Block& b : blocks_) {
      if (!out.empty()) out += " + ";
      switch (b.kind) {
        case BlockKind::diag: out += "<" + b.param.str() + ">"; break;
        case BlockKind::hyperbolic: out += "U"; break;
        case BlockKind::a_n: out += "A" + b.param.str(); break;
        case BlockKind::d_n: out += "D" + b.param.str(); break;
        case BlockKind::e_n: out += "E" + b.param.str(); break;
      }
      if (b.scale != 1) out += "(" + b.scale.str() + ")";
      if (b.multiplicity > 1) out += "^" + std::to_string(b.multiplicity);
    }
    return out;
  }

  static NamedDecomposition parse(const std::string& text);

  friend bool operator==(const NamedDecomposition&, const NamedDecomposition&) = default;

 private:
  std::vector<Block> blocks_;
};

// Block-diagonal Gram matrix of the decomposition, in the normalized order.
inline Lattice standard(const NamedDecomposition& expr) {
  std::vector<IMat> parts;
  std::size_t total = 0;
  for (const Block& b : expr.blocks()) {
    IMat g = block_gram(b.kind, b.param);
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= b.scale;
    for (int m = 0; m < b.multiplicity; ++m) {
      parts.push_back(g);
      total += g.rows();
    }
  }
  IMat gram(total, total);
  std::size_t off = 0;
  for (const IMat& g : parts) {
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j) gram(off + i, off + j) = g(i, j);
    off += g.rows();
  }
  return Lattice(gram);
}

namespace detail {

struct DecompParser {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }

  Integer parse_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      fail(errc::parse_error, "expected integer at position " + std::to_string(start) +
                                  " in \"" + s + "\"");
    return Integer(s.substr(start, pos - start));
  }

  Block parse_term() {
    skip_ws();
    if (pos >= s.size()) fail(errc::parse_error, "expected block in \"" + s + "\"");
    Block b;
    char c = s[pos];
    if (c == '<') {
      ++pos;
      b.kind = BlockKind::diag;
      b.param = parse_int();
      if (!eat('>')) fail(errc::parse_error, "expected '>' in \"" + s + "\"");
    } else if (c == 'U') {
      ++pos;
      b.kind = BlockKind::hyperbolic;
    } else if (c == 'A' || c == 'D' || c == 'E') {
      ++pos;
      b.kind = c == 'A' ? BlockKind::a_n : c == 'D' ? BlockKind::d_n : BlockKind::e_n;
      b.param = parse_int();
    } else {
      fail(errc::parse_error, std::string("unknown block '") + c + "' in \"" + s + "\"");
    }
    if (eat('(')) {
      b.scale = parse_int();
      if (!eat(')')) fail(errc::parse_error, "expected ')' in \"" + s + "\"");
    }
    if (eat('^')) {
      Integer m = parse_int();
      if (m < 1 || m > 1000) fail(errc::parse_error, "multiplicity out of range");
      b.multiplicity = static_cast<int>(m);
    }
    return b;
  }
};

}  // namespace detail

inline NamedDecomposition NamedDecomposition::parse(const std::string& text) {
  detail::DecompParser p{text};
  std::vector<Block> blocks;
  blocks.push_back(p.parse_term());
  while (true) {
    p.skip_ws();
    if (p.pos == text.size()) break;
    if (!p.eat('+')) fail(errc::parse_error, "expected '+' in \"" + text + "\"");
    blocks.push_back(p.parse_term());
  }
  return NamedDecomposition(std::move(blocks));
}

// Convenience builders.
inline Block diag_block(const Integer& a, const Integer& scale = 1, int mult = 1) {
  return Block{BlockKind::diag, a, scale, mult};
}
inline Block u_block(const Integer& scale = 1, int mult = 1) {
  return Block{BlockKind::hyperbolic, 0, scale, mult};
}
inline Block a_block(const Integer& n, const Integer& scale = 1, int mult = 1) {
  return Block{BlockKind::a_n, n, scale, mult};
}
inline Block d_block(const Integer& n, const Integer& scale = 1, int mult = 1) {
  return Block{BlockKind::d_n, n, scale, mult};
}
inline Block e_block(const Integer& n, const Integer& scale = 1, int mult = 1) {
  return Block{BlockKind::e_n, n, scale, mult};
}

}  // namespace primlat
