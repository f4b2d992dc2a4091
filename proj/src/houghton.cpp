#include "curvlab/houghton.hpp"

#include "curvlab/encoding.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <regex>
#include <sstream>

namespace curvlab {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& text, const std::string& rule) {
    const auto t = trim(text);
    try {
        std::size_t used = 0;
        const auto v = std::stoll(t, &used);
        if (used != t.size()) throw ParseError(text, rule);
        return v;
    } catch (const std::logic_error&) {
        throw ParseError(text, rule);
    }
}

}  // namespace

HoughtonElement HoughtonElement::translation(std::int64_t shift) {
    HoughtonElement x;
    x.shift_ = shift;
    return x;
}

HoughtonElement HoughtonElement::from_window(std::int64_t shift, std::int64_t lo, std::vector<std::int64_t> values) {
    HoughtonElement x;
    x.shift_ = shift;
    x.lo_ = lo;
    x.values_ = std::move(values);
    x.canonicalize();
    return x;
}

void HoughtonElement::canonicalize() {
    std::size_t first = 0;
    while (first < values_.size() && values_[first] == lo_ + static_cast<std::int64_t>(first) + shift_) ++first;
    std::size_t last = values_.size();
    while (last > first && values_[last - 1] == lo_ + static_cast<std::int64_t>(last - 1) + shift_) --last;
    if (first == last) {
        values_.clear();
        lo_ = 0;
        return;
    }
    values_ = std::vector<std::int64_t>(values_.begin() + static_cast<std::ptrdiff_t>(first),
                                        values_.begin() + static_cast<std::ptrdiff_t>(last));
    lo_ += static_cast<std::int64_t>(first);
}

HoughtonGroup::HoughtonGroup() {
    gens_.add_pair("s", HoughtonElement::translation(1), "s^-1", HoughtonElement::translation(-1));
    gens_.add_involution("sigma", HoughtonElement::from_window(0, -1, {0, -1}));
}

HoughtonGroup::Element HoughtonGroup::compose(const Element& x, const Element& y) const {
    // Function composition x o y. Outside y's window y is a translation, so
    // x o y can only differ from translation on y's window or where y lands
    // in x's window.
    if (x.window().empty() && y.window().empty()) return Element::translation(x.shift() + y.shift());
    std::int64_t lo = 0, hi = 0;
    bool have = false;
    auto extend = [&](std::int64_t a, std::int64_t b) {
        if (a >= b) return;
        lo = have ? std::min(lo, a) : a;
        hi = have ? std::max(hi, b) : b;
        have = true;
    };
    extend(y.lo(), y.hi());
    extend(x.lo() - y.shift(), x.hi() - y.shift());
    std::vector<std::int64_t> values(static_cast<std::size_t>(hi - lo));
    for (std::int64_t slot = lo; slot < hi; ++slot) values[static_cast<std::size_t>(slot - lo)] = x(y(slot));
    return Element::from_window(x.shift() + y.shift(), lo, std::move(values));
}

HoughtonGroup::Element HoughtonGroup::invert(const Element& x) const {
    if (x.window().empty()) return Element::translation(-x.shift());
    const auto [mn, mx] = std::minmax_element(x.window().begin(), x.window().end());
    const std::int64_t lo = *mn, hi = *mx + 1;
    std::vector<std::int64_t> values(static_cast<std::size_t>(hi - lo));
    for (std::int64_t y = lo; y < hi; ++y) values[static_cast<std::size_t>(y - lo)] = y - x.shift();
    for (std::int64_t slot = x.lo(); slot < x.hi(); ++slot) values[static_cast<std::size_t>(x(slot) - lo)] = slot;
    return Element::from_window(-x.shift(), lo, std::move(values));
}

Key HoughtonGroup::encode(const Element& x) const {
    Key key;
    encoding::put_i64(key, x.shift());
    encoding::put_i64(key, x.lo());
    for (auto v : x.window()) encoding::put_i64(key, v);
    return key;
}

HoughtonGroup::Element HoughtonGroup::decode(const Key& key) const {
    encoding::Reader in(key);
    const auto shift = in.i64();
    const auto lo = in.i64();
    std::vector<std::int64_t> values;
    while (!in.done()) values.push_back(in.i64());
    return Element::from_window(shift, lo, std::move(values));
}

std::string HoughtonGroup::format(const Element& x) const {
    std::string out = "H2{ ";
    bool first = true;
    for (std::int64_t slot = x.lo(); slot < x.hi(); ++slot) {
        if (x(slot) == slot + x.shift()) continue;
        if (!first) out += ", ";
        first = false;
        out += std::to_string(slot_to_bead(slot)) + ":" + std::to_string(slot_to_bead(x(slot)));
    }
    out += (first ? "; shift=" : " ; shift=") + std::to_string(x.shift()) + " }";
    return out;
}

HoughtonGroup::Element HoughtonGroup::parse(const std::string& text) const {
    const auto t = trim(text);
    if (t.rfind("w:", 0) == 0) return evaluate(*this, parse_word(*this, t.substr(2)));

    static const std::regex g_re(R"(g\(\s*(-?\d+)\s*\))");
    static const std::regex h_re(R"(h\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
    static const std::regex u_re(R"(u\(\s*(-?\d+)\s*,\s*(pos|neg)\s*\))");
    std::smatch m;
    if (std::regex_match(t, m, g_re)) return h2_g(static_cast<int>(parse_int(m[1].str(), "g(k)")));
    if (std::regex_match(t, m, h_re))
        return h2_h(static_cast<int>(parse_int(m[1].str(), "h(k,m)")), static_cast<int>(parse_int(m[2].str(), "h(k,m)")));
    if (std::regex_match(t, m, u_re))
        return evaluate(*this, h2_u(static_cast<int>(parse_int(m[1].str(), "u(l,pos|neg)")),
                                    m[2].str() == "pos" ? Orientation::PosFirst : Orientation::NegFirst));

    const auto open = t.find('{');
    if (open == std::string::npos || t.back() != '}' || trim(t.substr(0, open)) != "H2")
        throw ParseError(t, "H2{ b:b', ... ; shift=<int> }, g(k), h(k,m), u(l,pos|neg) or w: <word>");
    const auto body = t.substr(open + 1, t.size() - open - 2);
    const auto semi = body.find(';');
    if (semi == std::string::npos) throw ParseError(t, "';' separating the exception map from shift=<int>");
    const auto tail = trim(body.substr(semi + 1));
    if (tail.rfind("shift=", 0) != 0) throw ParseError(tail, "shift=<int>");
    const auto shift = parse_int(tail.substr(6), "shift=<int>");

    std::map<std::int64_t, std::int64_t> exceptions;
    std::stringstream ss(trim(body.substr(0, semi)));
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (trim(item).empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw ParseError(item, "bead:bead pair");
        const auto from = parse_int(item.substr(0, colon), "nonzero bead label");
        const auto to = parse_int(item.substr(colon + 1), "nonzero bead label");
        if (from == 0 || to == 0) throw ParseError(item, "nonzero bead labels");
        if (!exceptions.emplace(bead_to_slot(from), bead_to_slot(to)).second)
            throw ParseError(item, "each bead listed once");
    }
    if (exceptions.empty()) return Element::translation(shift);
    const auto lo = exceptions.begin()->first;
    const auto hi = exceptions.rbegin()->first + 1;
    std::vector<std::int64_t> values(static_cast<std::size_t>(hi - lo));
    for (std::int64_t slot = lo; slot < hi; ++slot) {
        auto it = exceptions.find(slot);
        values[static_cast<std::size_t>(slot - lo)] = it == exceptions.end() ? slot + shift : it->second;
    }
    // Eventually translating bijection: the window must map onto its own translate.
    auto images = values;
    std::sort(images.begin(), images.end());
    for (std::size_t i = 0; i < images.size(); ++i)
        if (images[i] != lo + static_cast<std::int64_t>(i) + shift)
            throw ParseError(t, "an exception map that defines a bijection");
    return Element::from_window(shift, lo, std::move(values));
}

Word h2_u(int l, Orientation orientation) {
    if (l < 1) throw DomainError("u_l needs l >= 1");
    const HoughtonGroup group;
    const int out = orientation == Orientation::NegFirst ? group.s_inverse() : group.s();
    const int back = orientation == Orientation::NegFirst ? group.s() : group.s_inverse();
    const int sigma = group.sigma();
    Word word;
    for (int i = 0; i < l - 1; ++i) word.push_back(out);
    for (int i = 0; i < 2 * (l - 1); ++i) word.insert(word.end(), {sigma, back});
    for (int i = 0; i < 2 * (l - 1); ++i) word.insert(word.end(), {sigma, out});
    word.push_back(sigma);
    for (int i = 0; i < l - 1; ++i) word.push_back(back);
    return word;
}

HoughtonElement h2_h(int outer, int inner) {
    if (inner < 1 || inner > outer) throw DomainError("h(k,m) needs 1 <= m <= k");
    const std::int64_t lo = -outer, hi = outer;
    std::vector<std::int64_t> values(static_cast<std::size_t>(hi - lo));
    for (std::int64_t slot = lo; slot < hi; ++slot) values[static_cast<std::size_t>(slot - lo)] = slot;
    for (std::int64_t l = inner; l <= outer; ++l) {
        values[static_cast<std::size_t>(bead_to_slot(l) - lo)] = bead_to_slot(-l);
        values[static_cast<std::size_t>(bead_to_slot(-l) - lo)] = bead_to_slot(l);
    }
    return HoughtonElement::from_window(0, lo, std::move(values));
}

Word h2_h_spelling(int outer, int inner, Orientation orientation, bool descending) {
    if (inner < 1 || inner > outer) throw DomainError("h(k,m) needs 1 <= m <= k");
    Word word;
    for (int i = 0; i <= outer - inner; ++i) {
        const auto u = h2_u(descending ? outer - i : inner + i, orientation);
        word.insert(word.end(), u.begin(), u.end());
    }
    return word;
}

std::set<std::int64_t> h2_moved_points(const HoughtonElement& x) {
    std::set<std::int64_t> moved;
    for (std::int64_t slot = x.lo(); slot < x.hi(); ++slot)
        if (x(slot) != slot + x.shift()) moved.insert(slot_to_bead(slot + x.shift()));
    return moved;
}

int h2_min_length_bound(const HoughtonElement& x) {
    std::int64_t bound = 0;
    for (auto bead : h2_moved_points(x)) bound = std::max<std::int64_t>(bound, bead < 0 ? -bead : bead);
    return static_cast<int>(bound);
}

}  // namespace curvlab
