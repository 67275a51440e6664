#include "quiverkit/quaternion.hpp"

namespace quiverkit {

namespace {

// Appends "+x" / "-x" (or bare "x" / "-x" when leading) for coefficient c in
// {1,-1,1/2,-1/2, sqrt2/2, -sqrt2/2} times the basis symbol.
void append_term(std::string& out, bool leading, bool negative, const char* symbol) {
    if (negative)
        out += '-';
    else if (!leading)
        out += '+';
    out += symbol;
}

}  // namespace

std::string quaternion_label(const Quaternion& q) {
    const QuadRational zero{Rational(0), Rational(0)};
    const std::array<const QuadRational*, 4> coord{&q.w, &q.x, &q.y, &q.z};
    const std::array<const char*, 4> symbol{"1", "i", "j", "k"};

    // Classify by denominator shape: integers, halves, or multiples of 1/sqrt2.
    bool any_sqrt = false, any_half = false;
    for (const auto* c : coord) {
        if (!(c->b == 0)) any_sqrt = true;
        if (denominator(c->a) == 2) any_half = true;
    }

    std::string body;
    bool leading = true;
    for (int t = 0; t < 4; ++t) {
        const QuadRational& c = *coord[t];
        if (c == zero) continue;
        bool negative = any_sqrt ? (c.b < 0) : (c.a < 0);
        append_term(body, leading, negative, symbol[t]);
        leading = false;
    }
    if (leading) return "0";
    if (any_sqrt) return "(" + body + ")/sqrt2";
    if (any_half) return "(" + body + ")/2";
    return body;
}

}  // namespace quiverkit
