#include "cubics/word.hpp"

#include <algorithm>
#include <set>

#include "cubics/errors.hpp"

namespace cubics {

void Word::push_right(Axis a) {
  if (!l_.empty() && l_.back() == a)
    l_.pop_back();
  else
    l_.push_back(a);
}

Word::Word(std::vector<Axis> raw) {
  l_.reserve(raw.size());
  for (Axis a : raw) push_right(a);
}

Word Word::parse(std::string_view text) {
  if (text == "1" || text == "e") return Word();
  Word w;
  for (char c : text) {
    switch (c) {
      case 'x': w.push_right(Axis::X); break;
      case 'y': w.push_right(Axis::Y); break;
      case 'z': w.push_right(Axis::Z); break;
      case 'a': w.push_right(Axis::Z); w.push_right(Axis::Y); break;  // g_x
      case 'A': w.push_right(Axis::Y); w.push_right(Axis::Z); break;
      case 'b': w.push_right(Axis::X); w.push_right(Axis::Z); break;  // g_y
      case 'B': w.push_right(Axis::Z); w.push_right(Axis::X); break;
      case 'c': w.push_right(Axis::Y); w.push_right(Axis::X); break;  // g_z
      case 'C': w.push_right(Axis::X); w.push_right(Axis::Y); break;
      case ' ': break;
      default:
        throw std::invalid_argument(std::string("bad word character: ") + c);
    }
  }
  return w;
}

Word Word::operator*(const Word& rhs) const {
  Word out = *this;
  for (Axis a : rhs.l_) out.push_right(a);
  return out;
}

Word Word::inverse() const {
  Word out;
  out.l_.assign(l_.rbegin(), l_.rend());
  return out;
}

Word Word::pow(int n) const {
  Word base = n < 0 ? inverse() : *this;
  int k = n < 0 ? -n : n;
  Word out;
  for (int i = 0; i < k; ++i) out = out * base;
  return out;
}

bool Word::operator<(const Word& rhs) const {
  if (l_.size() != rhs.l_.size()) return l_.size() < rhs.l_.size();
  return l_ < rhs.l_;
}

std::string Word::str() const {
  std::string s;
  s.reserve(l_.size());
  for (Axis a : l_) s.push_back(axis_char(a));
  return s;
}

std::string Word::g_str() const {
  if (l_.size() % 2 != 0) throw OddLengthWord("g_str: odd-length word is not in Gamma");
  std::string s;
  for (std::size_t i = 0; i + 1 < l_.size(); i += 2) {
    Axis u = l_[i], v = l_[i + 1];
    if (u == Axis::Z && v == Axis::Y) s.push_back('a');
    else if (u == Axis::Y && v == Axis::Z) s.push_back('A');
    else if (u == Axis::X && v == Axis::Z) s.push_back('b');
    else if (u == Axis::Z && v == Axis::X) s.push_back('B');
    else if (u == Axis::Y && v == Axis::X) s.push_back('c');
    else if (u == Axis::X && v == Axis::Y) s.push_back('C');
  }
  return s;
}

Word word_gx() { return Word::parse("zy"); }
Word word_gy() { return Word::parse("xz"); }
Word word_gz() { return Word::parse("yx"); }

CyclicReduction cyclic_reduce(const Word& w) {
  std::vector<Axis> core = w.letters();
  std::vector<Axis> conj;
  while (core.size() >= 2 && core.front() == core.back()) {
    conj.push_back(core.front());
    core.erase(core.begin());
    core.pop_back();
  }
  CyclicReduction out;
  out.core = Word(std::move(core));
  out.conjugator = Word(std::move(conj));
  return out;
}

bool is_cyclically_reduced(const Word& w) {
  return w.size() < 2 || w.letters().front() != w.letters().back();
}

ElementClass classify(const Word& w) {
  CyclicReduction cr = cyclic_reduce(w);
  std::set<Axis> used(cr.core.letters().begin(), cr.core.letters().end());
  Kind k;
  if (used.empty()) k = Kind::Identity;
  else if (used.size() == 3) k = Kind::Hyperbolic;
  else if (used.size() == 1) k = Kind::Elliptic;  // core is a single letter
  else k = Kind::Parabolic;                       // two-letter alternation power
  return {k, cr.conjugator};
}

IndAttr ind_attr(const Word& w) {
  if (!is_cyclically_reduced(w) || classify(w).kind != Kind::Hyperbolic || w.size() < 2)
    throw NotAlgebraicallyStable("ind_attr: word must be cyclically reduced and hyperbolic");
  return {axis_vertex(w.letters().back()), axis_vertex(w.letters().front())};
}

Word commutator(const Word& a, const Word& b) {
  return a.inverse() * b.inverse() * a * b;
}

bool commutes(const Word& a, const Word& b) { return commutator(a, b).empty(); }

namespace {
void enumerate_rec(Word& w, int remaining, bool even_only,
                   const std::function<void(const Word&)>& fn) {
  if (remaining == 0) return;
  for (int i = 0; i < 3; ++i) {
    Axis a = static_cast<Axis>(i);
    if (!w.empty() && w.letters().back() == a) continue;
    w.push_right(a);
    if (!even_only || w.size() % 2 == 0) fn(w);
    enumerate_rec(w, remaining - 1, even_only, fn);
    // undo: a reduced word never ends with a repeated letter, so pop is exact
    Word trimmed(std::vector<Axis>(w.letters().begin(), w.letters().end() - 1));
    w = trimmed;
  }
}
}  // namespace

void enumerate_words(int max_len, Parity parity, const std::function<void(const Word&)>& fn) {
  fn(Word());
  // DFS emits words in length-lex order within each subtree; regroup by length
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> acc;
    Word w;
    enumerate_rec(w, max_len, parity == Parity::Gamma, [&](const Word& u) {
      if (static_cast<int>(u.size()) == len) acc.push_back(u);
    });
    std::sort(acc.begin(), acc.end());
    for (const Word& u : acc) fn(u);
  }
}

}  // namespace cubics
