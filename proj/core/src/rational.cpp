#include <beslab/rational.hpp>

#include <cctype>
#include <stdexcept>

namespace beslab
{
    auto to_string(const Rational & q) -> std::string
    {
        if (denominator(q) == 1)
            return numerator(q).str();
        return numerator(q).str() + "/" + denominator(q).str();
    }

    namespace
    {
        auto parse_integer(std::string_view digits, std::string_view whole) -> BigInt
        {
            if (digits.empty())
                throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
            BigInt result = 0;
            for (char c : digits) {
                if (! std::isdigit(static_cast<unsigned char>(c)))
                    throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
                result = result * 10 + (c - '0');
            }
            return result;
        }
    }

    auto parse_rational(std::string_view text) -> Rational
    {
        std::string_view body = text;
        bool negative = false;
        if (! body.empty() && (body.front() == '-' || body.front() == '+')) {
            negative = body.front() == '-';
            body.remove_prefix(1);
        }

        Rational result;
        if (auto slash = body.find('/'); slash != std::string_view::npos) {
            BigInt num = parse_integer(body.substr(0, slash), text);
            BigInt den = parse_integer(body.substr(slash + 1), text);
            if (den == 0)
                throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
            result = Rational(num, den);
        }
        else if (auto dot = body.find('.'); dot != std::string_view::npos) {
            auto int_part = body.substr(0, dot);
            auto frac_part = body.substr(dot + 1);
            BigInt whole = int_part.empty() ? BigInt(0) : parse_integer(int_part, text);
            BigInt frac = frac_part.empty() ? BigInt(0) : parse_integer(frac_part, text);
            if (int_part.empty() && frac_part.empty())
                throw std::invalid_argument("not a number: '" + std::string(text) + "'");
            BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_part.size()));
            result = Rational(whole * scale + frac, scale);
        }
        else
            result = Rational(parse_integer(body, text));

        return negative ? Rational(-result) : result;
    }

    auto choose2(std::int64_t n) -> Rational
    {
        return Rational(BigInt(n) * BigInt(n - 1), BigInt(2));
    }

    auto to_double(const Rational & q) -> double
    {
        return q.convert_to<double>();
    }
}
