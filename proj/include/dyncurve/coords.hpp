#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "checked.hpp"
#include "error.hpp"

namespace dyncurve {

/// The surface K_n: genus-2 non-orientable, one boundary component, n >= 2
/// punctures. Punctures and the two crosscaps sit on the horizontal diameter.
struct SurfaceSpec {
  int n = 2;

  static SurfaceSpec checked(int n) {
    if (n < 2) throw CurveError(ErrorKind::ParameterError, "puncture count must be at least 2");
    return SurfaceSpec{n};
  }
};

/// Generalized Dynnikov coordinates (a; b; t; c1, c2).
///
/// Vectors are stored 0-based: a[i-1] holds a_i (1 <= i <= n-1) and b[i-1]
/// holds b_i (1 <= i <= n). Negative c entries denote non-primitive
/// components: -1 is the core curve, -2m is m copies of the bounding curve
/// and -2m-1 is both.
struct DynnikovCoordinates {
  int n = 2;
  std::vector<Int> a;
  std::vector<Int> b;
  Int t = 0;
  std::array<Int, 2> c{0, 0};

  friend bool operator==(const DynnikovCoordinates&, const DynnikovCoordinates&) = default;
};

/// Intersection counts (alpha; beta; gamma; c1, c2) of a minimal
/// representative with the reference arcs. alpha has 2n-2 entries, beta n+1.
struct TriangleCoordinates {
  int n = 2;
  std::vector<Int> alpha;
  std::vector<Int> beta;
  Int gamma = 0;
  std::array<Int, 2> c{0, 0};

  /// 1-based accessors matching the usual indexing of the arcs.
  Int alpha_at(int i) const { return alpha.at(static_cast<std::size_t>(i - 1)); }
  Int beta_at(int i) const { return beta.at(static_cast<std::size_t>(i - 1)); }

  friend bool operator==(const TriangleCoordinates&, const TriangleCoordinates&) = default;
};

/// A coordinate vector that has passed validate(). Only validate() makes one.
class ValidatedCoordinates {
 public:
  const DynnikovCoordinates& get() const noexcept { return coords_; }
  const DynnikovCoordinates* operator->() const noexcept { return &coords_; }
  int n() const noexcept { return coords_.n; }

 private:
  explicit ValidatedCoordinates(DynnikovCoordinates c) : coords_(std::move(c)) {}
  friend ValidatedCoordinates validate(const DynnikovCoordinates&);

  DynnikovCoordinates coords_;
};

inline void check_dimensions(const DynnikovCoordinates& v) {
  if (v.n < 2) throw CurveError(ErrorKind::DimensionMismatch, "n must be at least 2");
  const auto n = static_cast<std::size_t>(v.n);
  if (v.a.size() != n - 1)
    throw CurveError(ErrorKind::DimensionMismatch,
                     "a needs " + std::to_string(n - 1) + " entries, got " + std::to_string(v.a.size()));
  if (v.b.size() != n)
    throw CurveError(ErrorKind::DimensionMismatch,
                     "b needs " + std::to_string(n) + " entries, got " + std::to_string(v.b.size()));
}

inline void check_dimensions(const TriangleCoordinates& tri) {
  if (tri.n < 2) throw CurveError(ErrorKind::DimensionMismatch, "n must be at least 2");
  const auto n = static_cast<std::size_t>(tri.n);
  if (tri.alpha.size() != 2 * n - 2)
    throw CurveError(ErrorKind::DimensionMismatch,
                     "alpha needs " + std::to_string(2 * n - 2) + " entries, got " + std::to_string(tri.alpha.size()));
  if (tri.beta.size() != n + 1)
    throw CurveError(ErrorKind::DimensionMismatch,
                     "beta needs " + std::to_string(n + 1) + " entries, got " + std::to_string(tri.beta.size()));
}

inline bool is_zero(const DynnikovCoordinates& v) {
  auto zero = [](Int x) { return x == 0; };
  return std::all_of(v.a.begin(), v.a.end(), zero) && std::all_of(v.b.begin(), v.b.end(), zero) && v.t == 0 &&
         v.c[0] == 0 && v.c[1] == 0;
}

inline ValidatedCoordinates validate(const DynnikovCoordinates& coords) {
  check_dimensions(coords);
  if (is_zero(coords)) throw CurveError(ErrorKind::ZeroVector, "the zero vector encodes no multicurve");
  return ValidatedCoordinates(coords);
}

namespace detail {

// Reader for the "(x, y; z; ...)" block notation shared by both coordinate kinds.
class BlockReader {
 public:
  explicit BlockReader(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char ch) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ch)
      throw SyntaxError(pos_, std::string("expected '") + ch + "'");
    ++pos_;
  }

  bool peek(char ch) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == ch;
  }

  Int integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) throw SyntaxError(start, "expected an integer");
    std::string_view token = text_.substr(start, pos_ - start);
    if (token.front() == '+') token.remove_prefix(1);
    Int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range) throw CurveError(ErrorKind::Overflow, "integer literal out of range");
    if (ec != std::errc() || ptr != token.data() + token.size()) throw SyntaxError(start, "malformed integer");
    return value;
  }

  std::vector<Int> block() {
    std::vector<Int> values{integer()};
    while (peek(',')) {
      ++pos_;
      values.push_back(integer());
    }
    return values;
  }

  // Parses "(block; block; ...)" returning each block.
  std::vector<std::vector<Int>> blocks() {
    expect('(');
    std::vector<std::vector<Int>> out{block()};
    while (peek(';')) {
      ++pos_;
      out.push_back(block());
    }
    expect(')');
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "trailing characters");
    return out;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline void append_block(std::string& out, const std::vector<Int>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
}

inline std::array<Int, 2> pair_from(const std::vector<Int>& block, const char* what) {
  if (block.size() != 2) throw CurveError(ErrorKind::DimensionMismatch, std::string(what) + " needs exactly 2 entries");
  return {block[0], block[1]};
}

}  // namespace detail

/// Parses the canonical text form "(a_1,...,a_{n-1}; b_1,...,b_n; t; c_1,c_2)".
/// Whitespace anywhere between tokens is ignored.
inline DynnikovCoordinates parse_coords(std::string_view text, int n) {
  auto blocks = detail::BlockReader(text).blocks();
  if (blocks.size() != 4)
    throw CurveError(ErrorKind::DimensionMismatch, "expected 4 ';'-separated blocks, got " + std::to_string(blocks.size()));
  if (blocks[2].size() != 1) throw CurveError(ErrorKind::DimensionMismatch, "t block must hold one integer");
  DynnikovCoordinates v;
  v.n = n;
  v.a = std::move(blocks[0]);
  v.b = std::move(blocks[1]);
  v.t = blocks[2][0];
  v.c = detail::pair_from(blocks[3], "c block");
  check_dimensions(v);
  return v;
}

/// Canonical form, e.g. "(2; 1,0; -2; 2,0)".
inline std::string format_coords(const DynnikovCoordinates& v) {
  std::string out = "(";
  detail::append_block(out, v.a);
  out += "; ";
  detail::append_block(out, v.b);
  out += "; " + std::to_string(v.t) + "; ";
  detail::append_block(out, {v.c[0], v.c[1]});
  out += ')';
  return out;
}

/// Same notation for intersection counts: "(alpha; beta; gamma; c1,c2)".
inline TriangleCoordinates parse_triangle(std::string_view text, int n) {
  auto blocks = detail::BlockReader(text).blocks();
  if (blocks.size() != 4)
    throw CurveError(ErrorKind::DimensionMismatch, "expected 4 ';'-separated blocks, got " + std::to_string(blocks.size()));
  if (blocks[2].size() != 1) throw CurveError(ErrorKind::DimensionMismatch, "gamma block must hold one integer");
  TriangleCoordinates tri;
  tri.n = n;
  tri.alpha = std::move(blocks[0]);
  tri.beta = std::move(blocks[1]);
  tri.gamma = blocks[2][0];
  tri.c = detail::pair_from(blocks[3], "c block");
  check_dimensions(tri);
  return tri;
}

inline std::string format_triangle(const TriangleCoordinates& tri) {
  std::string out = "(";
  detail::append_block(out, tri.alpha);
  out += "; ";
  detail::append_block(out, tri.beta);
  out += "; " + std::to_string(tri.gamma) + "; ";
  detail::append_block(out, {tri.c[0], tri.c[1]});
  out += ')';
  return out;
}

}  // namespace dyncurve
