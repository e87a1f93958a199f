#include "hcyl/rational.hpp"

#include "hcyl/error.hpp"

#include <cctype>

namespace hcyl {

std::string to_string(const Rational& q)
{
    return q.get_str();
}

Rational parse_rational(std::string_view text)
{
    auto valid = [](std::string_view s) {
        if (s.empty())
            return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid(num) || !valid(den) || den[0] == '-')
        throw Error(ErrorCode::syntax, "invalid rational '" + std::string(text) + "'");
    std::string n(num[0] == '+' ? num.substr(1) : num);
    Integer d(std::string{den});
    if (d == 0)
        throw Error(ErrorCode::syntax, "zero denominator in '" + std::string(text) + "'");
    Rational q(Integer(n), d);
    q.canonicalize();
    return q;
}

} // namespace hcyl
