#include "polysum/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace polysum {

Rational makeRational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool parseInteger(std::string_view s, Integer& out) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
    out = Integer(std::string(s), 10);
    return true;
}

}  // namespace

std::optional<Rational> tryParseRational(std::string_view token) {
    if (token.empty()) return std::nullopt;

    if (auto slash = token.find('/'); slash != std::string_view::npos) {
        Integer num, den;
        if (!parseInteger(token.substr(0, slash), num)) return std::nullopt;
        if (!parseInteger(token.substr(slash + 1), den)) return std::nullopt;
        if (den == 0) return std::nullopt;
        return makeRational(num, den);
    }

    if (auto dot = token.find('.'); dot != std::string_view::npos) {
        bool negative = token[0] == '-';
        std::string_view body = (token[0] == '+' || token[0] == '-')
                                    ? token.substr(1)
                                    : token;
        dot = body.find('.');
        std::string_view intPart = body.substr(0, dot);
        std::string_view fracPart = body.substr(dot + 1);
        if (intPart.empty() && fracPart.empty()) return std::nullopt;
        for (char c : intPart)
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        for (char c : fracPart)
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        Integer num = intPart.empty() ? Integer(0) : Integer(std::string(intPart), 10);
        Integer den = 1;
        for (char c : fracPart) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
        if (negative) num = -num;
        return makeRational(num, den);
    }

    Integer n;
    if (!parseInteger(token, n)) return std::nullopt;
    return Rational(n);
}

Rational parseRational(std::string_view token) {
    auto q = tryParseRational(token);
    if (!q) throw std::invalid_argument("bad rational literal: " + std::string(token));
    return *q;
}

std::string str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace polysum
