#include "asdim/scalar.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>
#include <string>

namespace asdim {

  namespace {
    std::int64_t parse_integer(std::string_view text, std::string_view whole) {
      std::int64_t value = 0;
      auto const*  first = text.data();
      auto const*  last  = text.data() + text.size();
      if (first != last && *first == '+') {
        ++first;
      }
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last || first == last) {
        throw std::invalid_argument("invalid scalar \"" + std::string(whole)
                                    + "\"");
      }
      return value;
    }
  }  // namespace

  Scalar parse_scalar(std::string_view text) {
    while (!text.empty() && text.front() == ' ') {
      text.remove_prefix(1);
    }
    while (!text.empty() && text.back() == ' ') {
      text.remove_suffix(1);
    }
    if (text.empty()) {
      throw std::invalid_argument("empty scalar");
    }
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      auto num = parse_integer(text.substr(0, slash), text);
      auto den = parse_integer(text.substr(slash + 1), text);
      if (den == 0) {
        throw std::invalid_argument("zero denominator in \"" + std::string(text)
                                    + "\"");
      }
      return Scalar(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      auto int_part  = text.substr(0, dot);
      auto frac_part = text.substr(dot + 1);
      bool negative  = !int_part.empty() && int_part.front() == '-';
      if (negative) {
        int_part.remove_prefix(1);
      }
      if (frac_part.size() > 17) {
        throw std::invalid_argument("too many decimal digits in \""
                                    + std::string(text) + "\"");
      }
      std::int64_t den = 1;
      for (std::size_t i = 0; i < frac_part.size(); ++i) {
        den *= 10;
      }
      std::int64_t whole = int_part.empty() ? 0 : parse_integer(int_part, text);
      std::int64_t frac
          = frac_part.empty() ? 0 : parse_integer(frac_part, text);
      if (whole < 0 || frac < 0) {
        throw std::invalid_argument("invalid scalar \"" + std::string(text)
                                    + "\"");
      }
      Scalar result = Scalar(whole) + Scalar(frac, den);
      return negative ? -result : result;
    }
    return Scalar(parse_integer(text, text));
  }

  std::string format_scalar(Scalar const& value) {
    if (value.denominator() == 1) {
      return std::to_string(value.numerator());
    }
    return std::to_string(value.numerator()) + "/"
           + std::to_string(value.denominator());
  }

  std::ostream& operator<<(std::ostream& out, Scalar const& value) {
    return out << format_scalar(value);
  }

  Scalar const& ExtScalar::value() const {
    if (_infinite) {
      throw std::logic_error("value() called on an infinite ExtScalar");
    }
    return _value;
  }

  ExtScalar min(ExtScalar const& a, ExtScalar const& b) {
    return b < a ? b : a;
  }

  ExtScalar max(ExtScalar const& a, ExtScalar const& b) {
    return a < b ? b : a;
  }

  std::string format_scalar(ExtScalar const& value) {
    return value.is_infinite() ? std::string("inf")
                               : format_scalar(value.value());
  }

  ExtScalar parse_ext_scalar(std::string_view text) {
    if (text == "inf") {
      return ExtScalar::infinity();
    }
    return ExtScalar(parse_scalar(text));
  }

}  // namespace asdim
