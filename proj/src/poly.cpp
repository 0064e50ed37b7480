#include "comdet/poly.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace comdet {

int monomialDegree(const Monomial& m) {
  int d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

bool monomialLess(const Monomial& a, const Monomial& b) {
  const int da = monomialDegree(a), db = monomialDegree(b);
  if (da != db) return da < db;
  // Lexicographic tie break: higher power of the earliest differing
  // variable wins. This keeps the order compatible with multiplication.
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first != b[j].first) return a[i].first > b[j].first;
    if (a[i].second != b[j].second) return a[i].second < b[j].second;
    ++i;
    ++j;
  }
  return false;  // equal degrees and a common prefix exhausts both
}

namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& [v, e] : m) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b9 + (h << 6) + (h >> 2);
      h ^= static_cast<std::size_t>(e) + 0x85ebca6b + (h << 6) + (h >> 2);
    }
    return h;
  }
};

bool termLess(const std::pair<Monomial, mpz_class>& a, const std::pair<Monomial, mpz_class>& b) {
  return monomialLess(a.first, b.first);
}

}  // namespace

Poly::Poly(const mpz_class& c) {
  if (c != 0) terms_.emplace_back(Monomial{}, c);
}

Poly::Poly(long c) : Poly(mpz_class(c)) {}

Poly Poly::variable(Variable v, std::int32_t exp) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  if (exp == 0) return Poly(1);
  Poly p;
  p.terms_.emplace_back(Monomial{{v.id(), exp}}, 1);
  return p;
}

Poly Poly::term(const mpz_class& c, const Monomial& m) {
  Poly p;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

bool Poly::isOne() const {
  return terms_.size() == 1 && terms_.front().first.empty() && terms_.front().second == 1;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return monomialDegree(terms_.back().first);
}

void Poly::insertTerm(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const auto& t, const Monomial& key) {
                               return monomialLess(t.first, key);
                             });
  if (it != terms_.end() && it->first == m) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.emplace(it, m, c);
  }
}

Poly Poly::operator-() const {
  Poly out;
  out.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.terms_.emplace_back(m, -c);
  return out;
}

namespace {

// Merge two sorted term lists; sign multiplies the second operand.
Poly::TermList mergeTerms(const Poly::TermList& a, const Poly::TermList& b, int sign) {
  Poly::TermList out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      mpz_class c = sign > 0 ? mpz_class(a[i].second + b[j].second)
                             : mpz_class(a[i].second - b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    } else if (monomialLess(a[i].first, b[j].first)) {
      out.push_back(a[i++]);
    } else {
      out.emplace_back(b[j].first, sign > 0 ? b[j].second : -b[j].second);
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.emplace_back(b[j].first, sign > 0 ? b[j].second : -b[j].second);
  return out;
}

Monomial monomialProduct(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    } else if (a[i].first < b[j].first) {
      out.push_back(a[i++]);
    } else {
      out.push_back(b[j++]);
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

// Quotient a / b when every variable of b appears in a with enough
// multiplicity; nullopt otherwise.
std::optional<Monomial> monomialQuotient(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::size_t i = 0;
  for (const auto& [v, e] : b) {
    while (i < a.size() && a[i].first < v) out.push_back(a[i++]);
    if (i == a.size() || a[i].first != v || a[i].second < e) return std::nullopt;
    if (a[i].second > e) out.emplace_back(v, a[i].second - e);
    ++i;
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  return out;
}

}  // namespace

Poly Poly::operator+(const Poly& o) const {
  Poly out;
  out.terms_ = mergeTerms(terms_, o.terms_, +1);
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  Poly out;
  out.terms_ = mergeTerms(terms_, o.terms_, -1);
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  terms_ = mergeTerms(terms_, o.terms_, +1);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  terms_ = mergeTerms(terms_, o.terms_, -1);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  Poly out;
  if (terms_.empty() || o.terms_.empty()) return out;
  const Poly& small = terms_.size() <= o.terms_.size() ? *this : o;
  const Poly& large = terms_.size() <= o.terms_.size() ? o : *this;

  if (small.terms_.size() == 1) {
    const auto& [sm, sc] = small.terms_.front();
    out.terms_.reserve(large.terms_.size());
    for (const auto& [m, c] : large.terms_) out.terms_.emplace_back(monomialProduct(m, sm), c * sc);
    std::sort(out.terms_.begin(), out.terms_.end(), termLess);
    return out;
  }

  std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
  acc.reserve(small.terms_.size() * large.terms_.size());
  for (const auto& [ma, ca] : small.terms_)
    for (const auto& [mb, cb] : large.terms_) acc[monomialProduct(ma, mb)] += ca * cb;
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.terms_.emplace_back(m, std::move(c));
  std::sort(out.terms_.begin(), out.terms_.end(), termLess);
  return out;
}

Poly Poly::pow(std::int64_t exp) const {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  Poly result(1);
  Poly base = *this;
  while (exp > 0) {
    if (exp & 1) result *= base;
    exp >>= 1;
    if (exp > 0) base = base * base;
  }
  return result;
}

Poly Poly::exactDiv(const Poly& divisor) const {
  if (divisor.isZero()) throw std::invalid_argument("division by zero polynomial");
  if (terms_.empty()) return Poly();
  const auto& ltB = divisor.terms_.back();

  if (divisor.terms_.size() == 1) {
    Poly quot;
    quot.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      auto qm = monomialQuotient(m, ltB.first);
      if (!qm || !mpz_divisible_p(c.get_mpz_t(), ltB.second.get_mpz_t()))
        throw std::domain_error("inexact polynomial division");
      quot.terms_.emplace_back(std::move(*qm), c / ltB.second);
    }
    return quot;
  }

  // Heap-merged sparse division. The heap holds the pending terms of
  // A - Q*B: the unread terms of A and, for each quotient term q_i, the
  // products -q_i*b_j with j >= 1 (q_i*b_0 cancels by construction).
  // Streams are consumed in decreasing monomial order, one entry each.
  struct HeapEntry {
    Monomial m;
    std::int64_t qi;  // -1: stream of A at position aj; else quotient index
    std::int64_t j;
  };
  auto entryLess = [](const HeapEntry& a, const HeapEntry& b) {
    return monomialLess(a.m, b.m);
  };
  std::vector<HeapEntry> heap;
  heap.push_back({terms_.back().first, -1, static_cast<std::int64_t>(terms_.size()) - 1});

  // divisor terms in decreasing order; bDesc[0] is the leading term
  const auto& bTerms = divisor.terms_;
  const std::size_t nb = bTerms.size();
  auto bDesc = [&](std::size_t j) -> const std::pair<Monomial, mpz_class>& {
    return bTerms[nb - 1 - j];
  };

  Poly quot;  // built in decreasing order, reversed at the end
  mpz_class coeff, tmp;
  while (!heap.empty()) {
    Monomial m = heap.front().m;
    coeff = 0;
    while (!heap.empty() && heap.front().m == m) {
      std::pop_heap(heap.begin(), heap.end(), entryLess);
      HeapEntry e = std::move(heap.back());
      heap.pop_back();
      if (e.qi < 0) {
        coeff += terms_[static_cast<std::size_t>(e.j)].second;
        if (e.j > 0) {
          --e.j;
          e.m = terms_[static_cast<std::size_t>(e.j)].first;
          heap.push_back(std::move(e));
          std::push_heap(heap.begin(), heap.end(), entryLess);
        }
      } else {
        const auto& q = quot.terms_[static_cast<std::size_t>(e.qi)];
        tmp = q.second * bDesc(static_cast<std::size_t>(e.j)).second;
        coeff -= tmp;
        if (static_cast<std::size_t>(e.j) + 1 < nb) {
          ++e.j;
          e.m = monomialProduct(q.first, bDesc(static_cast<std::size_t>(e.j)).first);
          heap.push_back(std::move(e));
          std::push_heap(heap.begin(), heap.end(), entryLess);
        }
      }
    }
    if (coeff == 0) continue;
    auto qm = monomialQuotient(m, ltB.first);
    if (!qm || !mpz_divisible_p(coeff.get_mpz_t(), ltB.second.get_mpz_t()))
      throw std::domain_error("inexact polynomial division");
    quot.terms_.emplace_back(std::move(*qm), coeff / ltB.second);
    if (nb > 1) {
      const auto& q = quot.terms_.back();
      heap.push_back({monomialProduct(q.first, bDesc(1).first),
                      static_cast<std::int64_t>(quot.terms_.size()) - 1, 1});
      std::push_heap(heap.begin(), heap.end(), entryLess);
    }
  }
  std::reverse(quot.terms_.begin(), quot.terms_.end());
  return quot;
}

Poly Poly::setZero(std::int32_t element) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    bool involves = std::any_of(m.begin(), m.end(), [&](const auto& ve) {
      return Variable::fromId(ve.first).element == element;
    });
    if (!involves) out.terms_.emplace_back(m, c);
  }
  return out;
}

Poly Poly::unsignedSpecialize() const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Monomial sub;
    for (const auto& [vid, e] : m) {
      Variable v = Variable::fromId(vid);
      v.kind = VarKind::Plain;
      sub.emplace_back(v.id(), e);
    }
    std::sort(sub.begin(), sub.end());
    Monomial merged;
    for (const auto& [vid, e] : sub) {
      if (!merged.empty() && merged.back().first == vid)
        merged.back().second += e;
      else
        merged.emplace_back(vid, e);
    }
    out.insertTerm(merged, c);
  }
  return out;
}

mpz_class Poly::evalInt(const std::function<mpz_class(Variable)>& assignment) const {
  mpz_class total = 0;
  for (const auto& [m, c] : terms_) {
    mpz_class v = c;
    for (const auto& [vid, e] : m) {
      mpz_class base = assignment(Variable::fromId(vid));
      mpz_class powed;
      mpz_pow_ui(powed.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
      v *= powed;
    }
    total += v;
  }
  return total;
}

std::string variableName(Variable v, const GroundSet& ground) {
  std::string out = "x[" + ground.name(static_cast<std::size_t>(v.element)) + "]";
  if (v.kind == VarKind::Plus) out += '+';
  if (v.kind == VarKind::Minus) out += '-';
  return out;
}

std::string Poly::str(const GroundSet& ground) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpz_class abs = c < 0 ? mpz_class(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool needCoeff = abs != 1 || m.empty();
    if (needCoeff) os << abs.get_str();
    bool firstVar = !needCoeff;
    for (const auto& [vid, e] : m) {
      if (!firstVar || needCoeff) os << "*";
      firstVar = false;
      os << variableName(Variable::fromId(vid), ground);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& text;
  const GroundSet& ground;
  std::size_t pos = 0;

  void skipSpace() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skipSpace();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skipSpace();
    return pos < text.size() ? text[pos] : '\0';
  }

  mpz_class parseInt() {
    skipSpace();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos)
      throw std::invalid_argument("expected integer at position " + std::to_string(pos));
    return mpz_class(text.substr(start, pos - start));
  }

  Poly parseFactor() {
    skipSpace();
    if (peek() != 'x') {
      return Poly(parseInt());
    }
    ++pos;  // 'x'
    if (!eat('[')) throw std::invalid_argument("expected '[' after x");
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ']') ++pos;
    if (pos == text.size()) throw std::invalid_argument("unterminated variable name");
    std::string name = text.substr(start, pos - start);
    ++pos;  // ']'
    Variable v{static_cast<std::int32_t>(ground.index(name)), VarKind::Plain};
    if (pos < text.size() && text[pos] == '+') {
      v.kind = VarKind::Plus;
      ++pos;
    } else if (pos < text.size() && text[pos] == '-') {
      v.kind = VarKind::Minus;
      ++pos;
    }
    std::int32_t exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exp = static_cast<std::int32_t>(parseInt().get_si());
    }
    return Poly::variable(v, exp);
  }

  Poly parseTerm() {
    Poly out = parseFactor();
    while (eat('*')) out *= parseFactor();
    return out;
  }

  Poly parse() {
    Poly out;
    bool neg = eat('-');
    out += neg ? -parseTerm() : parseTerm();
    while (true) {
      skipSpace();
      if (pos >= text.size()) break;
      if (eat('+')) {
        out += parseTerm();
      } else if (eat('-')) {
        out -= parseTerm();
      } else {
        throw std::invalid_argument("unexpected character at position " + std::to_string(pos));
      }
    }
    return out;
  }
};

}  // namespace

Poly parsePoly(const std::string& text, const GroundSet& ground) {
  Parser p{text, ground};
  return p.parse();
}

}  // namespace comdet
