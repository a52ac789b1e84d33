#include "whitt/pbw.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace whitt {

UEAElement UEAElement::scalar(const Rational& c) {
  UEAElement u;
  u.add({}, c);
  return u;
}

UEAElement UEAElement::generator(int i) {
  UEAElement u;
  u.add({i}, 1);
  return u;
}

UEAElement UEAElement::generator(const SuperStructure& s, const std::string& name) {
  return generator(s.index(name));
}

void UEAElement::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

UEAElement operator*(const UEAElement& a, const UEAElement& b) {
  UEAElement out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      UEAElement::Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  return out;
}

UEAElement operator*(const Rational& c, UEAElement a) {
  UEAElement out;
  for (const auto& [w, x] : a.terms_) out.add(w, c * x);
  return out;
}

std::string UEAElement::str(const SuperStructure& s) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    Rational mag = abs(c);
    if (w.empty()) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << ' ';
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << s.gen(w[i]).name;
  }
  return os.str();
}

bool is_normal(const SuperStructure& s, const UEAElement::Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) return false;
    if (w[i] == w[i + 1] && s.odd(w[i])) return false;
  }
  return true;
}

UEAElement pbw_reduce(const SuperStructure& s, const UEAElement& x) {
  UEAElement done;
  std::vector<std::pair<UEAElement::Word, Rational>> work(x.terms().begin(), x.terms().end());
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    std::size_t i = 0;
    while (i + 1 < w.size() && !(w[i] > w[i + 1] || (w[i] == w[i + 1] && s.odd(w[i])))) ++i;
    if (i + 1 >= w.size()) {
      done.add(w, c);
      continue;
    }
    const int a = w[i], b = w[i + 1];
    auto splice = [&](const UEAElement::Word& mid, const Rational& coeff) {
      UEAElement::Word out(w.begin(), w.begin() + i);
      out.insert(out.end(), mid.begin(), mid.end());
      out.insert(out.end(), w.begin() + i + 2, w.end());
      work.emplace_back(std::move(out), coeff);
    };
    if (a == b) {
      // odd x: x^2 = [x,x]/2
      for (const auto& [k, v] : s.bracket(a, a)) splice({k}, c * v / 2);
      continue;
    }
    const int sg = s.odd(a) && s.odd(b) ? -1 : 1;
    splice({b, a}, c * sg);
    for (const auto& [k, v] : s.bracket(a, b)) splice({k}, c * v);
  }
  return done;
}

UEAElement parse_uea(const SuperStructure& s, const std::string& text) {
  UEAElement total;
  std::istringstream in(text);
  std::string tok;
  Rational sign = 1;
  UEAElement term = UEAElement::scalar(1);
  bool have = false;
  auto flush = [&] {
    if (have) total += sign * term;
    term = UEAElement::scalar(1);
    have = false;
  };
  bool pending_sign = false;
  while (in >> tok) {
    if (tok == "+" || tok == "-") {
      if (pending_sign) throw std::invalid_argument("two signs in a row in '" + text + "'");
      pending_sign = true;
      flush();
      sign = tok == "-" ? -1 : 1;
      continue;
    }
    have = true;
    pending_sign = false;
    bool numeric = std::isdigit(static_cast<unsigned char>(tok[0])) || (tok.size() > 1 && tok[0] == '-');
    if (numeric) term = parse_rational(tok) * term;
    else term = term * UEAElement::generator(s, tok);
  }
  if (pending_sign) throw std::invalid_argument("dangling sign in '" + text + "'");
  flush();
  return total;
}

}  // namespace whitt
