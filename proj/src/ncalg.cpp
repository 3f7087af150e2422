#include "cmc/ncalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cmc {

std::string word_to_string(const Word& w) {
  std::string s;
  for (const auto& l : w) s += l;
  return s;
}

Word parse_word(const std::string& s) {
  Word w;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (s.compare(i, 4, "einf") == 0) {
      w.emplace_back("einf");
      i += 3;
    } else if (std::isalpha(static_cast<unsigned char>(ch))) {
      w.emplace_back(1, ch);
    } else if (std::isdigit(static_cast<unsigned char>(ch)) && !w.empty()) {
      w.back() += ch;
    } else {
      throw std::invalid_argument("bad word '" + s + "'");
    }
  }
  return w;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

NCElement NCElement::word(const Word& w, int m, const Scalar& c) {
  NCElement e(m);
  e.add_term(w, c);
  return e;
}

NCElement NCElement::constant(const Scalar& c) { return word({}, c.conductor(), c); }

int NCElement::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.size());
}

void NCElement::add_term(const Word& w, const Scalar& c) {
  if (c.conductor() != m_) throw ConductorMismatch("NCElement conductor mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCElement& NCElement::operator+=(const NCElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCElement& NCElement::operator-=(const NCElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCElement& NCElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

NCElement operator*(const NCElement& a, const NCElement& b) {
  if (a.m_ != b.m_) throw ConductorMismatch("NCElement conductor mismatch");
  NCElement r(a.m_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add_term(concat(wa, wb), ca * cb);
  return r;
}

std::string NCElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    if (!w.empty()) os << "*" << word_to_string(w);
  }
  return os.str();
}

NCElement reverse_involution(const NCElement& p) {
  NCElement r(p.conductor());
  for (const auto& [w, c] : p.terms()) r.add_term(reversed(w), c);
  return r;
}

Matrix evaluate_on_vector(const Word& w, const LetterMatrices& mats, const Matrix& start) {
  Matrix u = start;
  for (const auto& l : w) {
    auto it = mats.find(l);
    if (it == mats.end()) throw std::invalid_argument("no matrix for letter '" + l + "'");
    if (it->second.cols() != u.rows())
      throw ShapeMismatch("letter '" + l + "' does not act on a vector of this dimension");
    u = it->second * u;
  }
  return u;
}

Matrix evaluate_on_vector(const NCElement& p, const LetterMatrices& mats, const Matrix& start) {
  std::optional<Matrix> acc;
  for (const auto& [w, c] : p.terms()) {
    Matrix u = evaluate_on_vector(w, mats, start) * c;
    if (acc) *acc += u;
    else acc = std::move(u);
  }
  if (!acc) throw std::invalid_argument("cannot infer result shape of the zero element");
  return *acc;
}

Matrix word_operator(const Word& w, const LetterMatrices& mats, std::size_t dim, int m) {
  return evaluate_on_vector(w, mats, Matrix::identity(dim, m));
}

Matrix element_operator(const NCElement& p, const LetterMatrices& mats, std::size_t dim) {
  Matrix r(dim, dim, p.conductor());
  for (const auto& [w, c] : p.terms()) r += word_operator(w, mats, dim, p.conductor()) * c;
  return r;
}

std::vector<Word> enumerate_words(const std::vector<std::string>& alphabet, int d) {
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (int len = 1; len <= d; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (const auto& a : alphabet) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

std::vector<Word> enumerate_paths(const Quiver& q, int from, int max_len, std::optional<int> to) {
  std::vector<std::pair<Word, int>> all{{Word{}, from}};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t level_end = all.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (const auto& a : q.arrows) {
        if (a.from() != all[i].second) continue;
        Word w = all[i].first;
        w.push_back(a.name);
        all.emplace_back(std::move(w), a.to());
      }
    }
    level_begin = level_end;
  }
  std::vector<Word> out;
  for (auto& [w, end] : all)
    if (!to || end == *to) out.push_back(std::move(w));
  std::stable_sort(out.begin(), out.end(), LengthLex{});
  return out;
}

std::optional<int> path_end(const Quiver& q, int from, const Word& w) {
  int at = from;
  for (const auto& l : w) {
    const Arrow& a = q.arrow(l);
    if (a.from() != at) return std::nullopt;
    at = a.to();
  }
  return at;
}

std::string idempotent_name(const Quiver& q, int v) { return "e" + q.vertices.at(v); }

NCElement path_reduce(const Quiver& q, const NCElement& p) {
  std::map<std::string, int> idem;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) idem[idempotent_name(q, static_cast<int>(v))] = static_cast<int>(v);
  NCElement out(p.conductor());
  for (const auto& [w, c] : p.terms()) {
    if (w.empty()) throw std::invalid_argument("empty word is ambiguous in a path algebra; use e<vertex>");
    int at = -1;
    bool ok = true;
    Word arrows;
    for (const auto& l : w) {
      int from, to;
      if (auto it = idem.find(l); it != idem.end()) {
        from = to = it->second;
      } else {
        const Arrow& a = q.arrow(l);
        from = a.from();
        to = a.to();
        arrows.push_back(l);
      }
      if (at >= 0 && at != from) {
        ok = false;
        break;
      }
      at = to;
    }
    if (!ok) continue;
    if (arrows.empty()) arrows.push_back(idempotent_name(q, at));
    out.add_term(arrows, c);
  }
  return out;
}

}  // namespace cmc
