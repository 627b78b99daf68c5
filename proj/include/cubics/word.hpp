#pragma once

// Exact combinatorics of the free product Z/2 * Z/2 * Z/2 generated by the
// coordinate involutions s_x, s_y, s_z, and of the rank-2 free subgroup
// generated by g_x = s_z∘s_y, g_y = s_x∘s_z, g_z = s_y∘s_x.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace cubics {

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline char axis_char(Axis a) { return "xyz"[static_cast<int>(a)]; }

// Reduced word over {s_x, s_y, s_z}. Letters are stored left-to-right in
// composition order: letters()[0] is applied last, letters().back() first.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Axis> raw);  // reduces

  static Word parse(std::string_view text);  // "xyz..." or g-alphabet "aAbBcC"

  const std::vector<Axis>& letters() const { return l_; }
  std::size_t size() const { return l_.size(); }
  bool empty() const { return l_.empty(); }

  Word operator*(const Word& rhs) const;  // concatenation + reduction
  Word inverse() const;                   // reversed letter sequence
  Word pow(int n) const;

  bool operator==(const Word&) const = default;
  bool operator<(const Word& rhs) const;  // length-lex, X<Y<Z

  std::string str() const;    // involution alphabet
  std::string g_str() const;  // g-alphabet; throws OddLengthWord

  void push_right(Axis a);  // append one letter applied first, reducing

 private:
  std::vector<Axis> l_;
};

Word word_gx();
Word word_gy();
Word word_gz();

enum class Kind { Identity, Elliptic, Parabolic, Hyperbolic };

struct ElementClass {
  Kind kind;
  Word conjugator;  // w = conjugator * core * conjugator^-1
};

struct CyclicReduction {
  Word core;
  Word conjugator;
};

CyclicReduction cyclic_reduce(const Word& w);
ElementClass classify(const Word& w);
bool is_cyclically_reduced(const Word& w);

enum class Vertex : std::uint8_t { v1 = 0, v2 = 1, v3 = 2 };

inline Vertex axis_vertex(Axis a) { return static_cast<Vertex>(a); }
inline int vertex_index(Vertex v) { return static_cast<int>(v); }

struct IndAttr {
  Vertex ind;
  Vertex attr;
};

// Requires w cyclically reduced, hyperbolic, length >= 2.
// Ind is the vertex of the right-most (first applied) letter, Attr of the
// left-most (last applied) letter.
IndAttr ind_attr(const Word& w);

// [a, b] = a^-1 b^-1 a b (right-most factor applied first)
Word commutator(const Word& a, const Word& b);
bool commutes(const Word& a, const Word& b);

enum class Parity { Gamma, GammaStar };

// Yields every reduced word of length <= max_len exactly once, in
// length-lexicographic order (Gamma restricts to even lengths).
void enumerate_words(int max_len, Parity parity, const std::function<void(const Word&)>& fn);

}  // namespace cubics
