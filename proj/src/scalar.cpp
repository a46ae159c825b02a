#include "workbench/scalar.hpp"

#include <cctype>

namespace wb {

namespace {

// Strict integer syntax: optional sign, then one or more digits.
std::optional<Int> parse_int(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (i == text.size()) return std::nullopt;
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) return std::nullopt;
    Int v(text.substr(i));
    return text[0] == '-' ? -v : v;
}

} // namespace

std::optional<Scalar> parse_scalar(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        auto n = parse_int(text);
        if (!n) return std::nullopt;
        return Scalar(*n);
    }
    auto n = parse_int(text.substr(0, slash));
    auto d = parse_int(text.substr(slash + 1));
    if (!n || !d || *d <= 0) return std::nullopt;
    return Scalar(*n, *d);
}

} // namespace wb
