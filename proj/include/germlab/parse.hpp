#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <type_traits>

#include "germlab/polynomial.hpp"

namespace germlab {

/// Syntax error with a 0-based byte offset into the parsed text.
struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t p)
      : std::runtime_error(msg + " at column " + std::to_string(p + 1)), pos(p) {}
};

namespace detail {

template <class K>
class PolyParser {
 public:
  PolyParser(std::string_view src, RingPtr<K> ring) : s_(src), ring_(std::move(ring)) {}

  Polynomial<K> parse() {
    skip();
    if (i_ == s_.size()) throw ParseError("empty polynomial", i_);
    auto p = expr();
    skip();
    if (i_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[i_] + "'", i_);
    return p;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  Polynomial<K> expr() {
    bool neg = eat('-');
    if (!neg) eat('+');
    auto acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  bool starts_factor() {
    skip();
    if (i_ >= s_.size()) return false;
    char c = s_[i_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Polynomial<K> term() {
    auto acc = power();
    for (;;) {
      if (eat('*')) {
        acc *= power();
      } else if (eat('/')) {
        skip();
        std::size_t at = i_;
        auto d = power();
        if constexpr (!std::is_same_v<K, Rational>) {
          // a nonzero rational divisor that vanishes mod p
          if (d.is_zero()) {
            auto qr = make_ring<Rational>(ring_->names());
            if (!PolyParser<Rational>(s_.substr(at, i_ - at), qr).parse().is_zero())
              throw BadPrime("divisor " + std::string(s_.substr(at, i_ - at)) + " vanishes in " + ring_->field().name());
          }
        }
        if (!d.is_constant() || d.is_zero()) throw ParseError("division only by nonzero constants", at);
        acc = acc.scaled(inverse(d.constant_term()));
      } else if (starts_factor()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  Polynomial<K> power() {
    auto base = primary();
    if (eat('^')) {
      skip();
      std::size_t at = i_;
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      if (j == i_) throw ParseError("expected exponent", at);
      unsigned long e = std::stoul(std::string(s_.substr(i_, j - i_)));
      if (e > 0xFFFF) throw ParseError("exponent too large", at);
      i_ = j;
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial<K> primary() {
    skip();
    if (i_ >= s_.size()) throw ParseError("unexpected end of input", i_);
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      auto p = expr();
      if (!eat(')')) throw ParseError("expected ')'", i_);
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      Rational q(mpz_class(std::string(s_.substr(i_, j - i_))));
      i_ = j;
      return Polynomial<K>::constant(ring_, ring_->field().from_rational(q));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
      std::string name(s_.substr(i_, j - i_));
      auto idx = ring_->index_of(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'", i_);
      i_ = j;
      return Polynomial<K>::variable(ring_, *idx);
    }
    throw ParseError(std::string("unexpected '") + c + "'", i_);
  }

  std::string_view s_;
  RingPtr<K> ring_;
  std::size_t i_ = 0;
};

}  // namespace detail

/// Parses e.g. "x^2 - 3/2*x*y + 1". `*` may be omitted between factors.
template <class K>
Polynomial<K> parse_polynomial(std::string_view text, const RingPtr<K>& ring) {
  return detail::PolyParser<K>(text, ring).parse();
}

}  // namespace germlab
