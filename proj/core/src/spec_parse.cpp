#include "annigraph/spec_parse.hpp"

#include <cctype>
#include <string>

namespace annigraph {

namespace {

[[noreturn]] void fail(std::string_view spec, std::size_t pos, const std::string& what) {
    throw Error(ErrorKind::ParseError,
                what + " at position " + std::to_string(pos) + " in '" + std::string(spec) + "'");
}

std::int64_t parse_int(std::string_view spec, std::size_t& pos) {
    std::size_t start = pos;
    std::int64_t value = 0;
    while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) {
        value = value * 10 + (spec[pos] - '0');
        if (value > (std::int64_t{1} << 56)) fail(spec, start, "number too large");
        ++pos;
    }
    if (pos == start) fail(spec, pos, "expected a number");
    return value;
}

// P^A with P prime.
std::pair<std::int64_t, std::int64_t> parse_prime_power(std::string_view spec, std::size_t& pos) {
    std::size_t base_pos = pos;
    std::int64_t p = parse_int(spec, pos);
    if (pos >= spec.size() || spec[pos] != '^') fail(spec, pos, "expected '^'");
    ++pos;
    std::int64_t a = parse_int(spec, pos);
    if (!is_prime(p))
        throw Error(ErrorKind::NonPrimeBase, "base " + std::to_string(p) + " at position " +
                                                 std::to_string(base_pos) + " is not prime");
    if (a < 1) fail(spec, pos, "exponent must be >= 1");
    std::int64_t mod = 1;
    for (std::int64_t t = 0; t < a; ++t) {
        if (mod > (std::int64_t{1} << 56) / p) fail(spec, base_pos, "prime power too large");
        mod *= p;
    }
    return {p, mod};
}

}  // namespace

FiniteAbelianGroup parse_group_spec(std::string_view spec) {
    std::size_t colon = spec.find(':');
    if (colon == std::string_view::npos) fail(spec, 0, "expected 'kind:...'");
    std::string_view kind = spec.substr(0, colon);
    std::size_t pos = colon + 1;

    if (kind == "moduli") {
        std::vector<std::int64_t> moduli;
        for (;;) {
            std::int64_t n = parse_int(spec, pos);
            if (n < 2) fail(spec, pos, "modulus must be >= 2");
            moduli.push_back(n);
            if (pos == spec.size()) break;
            if (spec[pos] != ',') fail(spec, pos, "expected ','");
            ++pos;
        }
        return FiniteAbelianGroup(std::move(moduli));
    }
    if (kind == "p^a") {
        auto [p, mod] = parse_prime_power(spec, pos);
        if (pos != spec.size()) fail(spec, pos, "trailing characters");
        return FiniteAbelianGroup({mod});
    }
    if (kind == "plist") {
        std::vector<std::int64_t> ps, mods;
        for (int t = 0; t < 3; ++t) {
            if (t) {
                if (pos >= spec.size() || spec[pos] != ',') fail(spec, pos, "expected ','");
                ++pos;
            }
            std::size_t at = pos;
            auto [p, mod] = parse_prime_power(spec, pos);
            if (!mods.empty() && mod < mods.back()) fail(spec, at, "exponents must be ascending");
            ps.push_back(p);
            mods.push_back(mod);
        }
        if (pos != spec.size()) fail(spec, pos, "trailing characters");
        if (ps[0] != ps[1] || ps[1] != ps[2]) fail(spec, 0, "plist needs a single prime");
        return FiniteAbelianGroup(std::move(mods));
    }
    fail(spec, 0, "unknown kind '" + std::string(kind) + "'");
}

}  // namespace annigraph
