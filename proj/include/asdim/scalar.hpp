#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace asdim {

  // Every distance, radius and weight is an exact rational. Floating point
  // never enters a certificate.
  // boost::rational does the arithmetic; comparisons are defined here since
  // its mixed rational/integer operator== recurses under C++20 (Boost 1.74).
  class Scalar {
   public:
    using rational_type = boost::rational<std::int64_t>;

    constexpr Scalar() = default;
    template <std::integral I>
    constexpr Scalar(I value)  // NOLINT(runtime/explicit)
        : _value(static_cast<std::int64_t>(value)) {}
    Scalar(std::int64_t numerator, std::int64_t denominator)
        : _value(numerator, denominator) {}
    explicit Scalar(rational_type value) : _value(value) {}

    std::int64_t numerator() const noexcept { return _value.numerator(); }
    std::int64_t denominator() const noexcept { return _value.denominator(); }
    rational_type const& rational() const noexcept { return _value; }

    Scalar& operator+=(Scalar const& o) { _value += o._value; return *this; }
    Scalar& operator-=(Scalar const& o) { _value -= o._value; return *this; }
    Scalar& operator*=(Scalar const& o) { _value *= o._value; return *this; }
    Scalar& operator/=(Scalar const& o) { _value /= o._value; return *this; }

    friend Scalar operator+(Scalar a, Scalar const& b) { return a += b; }
    friend Scalar operator-(Scalar a, Scalar const& b) { return a -= b; }
    friend Scalar operator*(Scalar a, Scalar const& b) { return a *= b; }
    friend Scalar operator/(Scalar a, Scalar const& b) { return a /= b; }
    friend Scalar operator-(Scalar const& a) { return Scalar(-a._value); }

    friend bool operator==(Scalar const& a, Scalar const& b) {
      return a._value.numerator() == b._value.numerator()
             && a._value.denominator() == b._value.denominator();
    }
    friend std::strong_ordering operator<=>(Scalar const& a, Scalar const& b) {
      if (a._value < b._value) {
        return std::strong_ordering::less;
      }
      if (b._value < a._value) {
        return std::strong_ordering::greater;
      }
      return std::strong_ordering::equal;
    }

   private:
    rational_type _value{0};
  };

  std::ostream& operator<<(std::ostream& out, Scalar const& value);

  // Accepts "p", "p/q", "-p/q" and terminating decimals such as "0.25".
  Scalar parse_scalar(std::string_view text);

  // Canonical text form: "p" for integers, otherwise "p/q" in lowest terms.
  std::string format_scalar(Scalar const& value);

  // A scalar extended by +infinity. Used for distances to the empty set and
  // for Lebesgue numbers of covers containing the whole space.
  class ExtScalar {
   public:
    ExtScalar() = default;
    ExtScalar(Scalar value) : _value(value) {}  // NOLINT(runtime/explicit)
    template <std::integral I>
    ExtScalar(I value) : _value(value) {}  // NOLINT(runtime/explicit)

    static ExtScalar infinity() {
      ExtScalar result;
      result._infinite = true;
      return result;
    }

    bool is_infinite() const noexcept { return _infinite; }
    bool is_finite() const noexcept { return !_infinite; }

    // Throws std::logic_error when infinite.
    Scalar const& value() const;

    friend bool operator==(ExtScalar const& a, ExtScalar const& b) {
      if (a._infinite || b._infinite) {
        return a._infinite == b._infinite;
      }
      return a._value == b._value;
    }

    friend std::strong_ordering operator<=>(ExtScalar const& a,
                                            ExtScalar const& b) {
      if (a._infinite || b._infinite) {
        return static_cast<int>(a._infinite) <=> static_cast<int>(b._infinite);
      }
      return a._value <=> b._value;
    }

   private:
    Scalar _value{0};
    bool   _infinite = false;
  };

  ExtScalar   min(ExtScalar const& a, ExtScalar const& b);
  ExtScalar   max(ExtScalar const& a, ExtScalar const& b);
  std::string format_scalar(ExtScalar const& value);  // "inf" for infinity
  ExtScalar   parse_ext_scalar(std::string_view text);

}  // namespace asdim
