#include "slowreal/registry.hpp"

#include "slowreal/counterexamples.hpp"

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace slowreal {

namespace {

// A token and its byte position in the original spec string, so literal
// errors can say where they happened.
struct Token {
    std::string text;
    std::size_t pos = 0;
};

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Head word, remainder, and the remainder's offset in spec.
struct Split {
    std::string head;
    std::string rest;
    std::size_t rest_pos = 0;
};

Split split_head(const std::string& spec) {
    std::size_t b = 0;
    while (b < spec.size() && std::isspace(static_cast<unsigned char>(spec[b]))) ++b;
    std::size_t e = b;
    while (e < spec.size() && !std::isspace(static_cast<unsigned char>(spec[e]))) ++e;
    std::size_t r = e;
    while (r < spec.size() && std::isspace(static_cast<unsigned char>(spec[r]))) ++r;
    return {spec.substr(b, e - b), trim(spec.substr(r)), r};
}

std::vector<Token> split_words(const std::string& s, std::size_t base) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back({s.substr(i, j - i), base + i});
        i = j;
    }
    return out;
}

// Elements of a bracketed list, split on ',' or ';' outside nested brackets.
std::vector<Token> split_list(const std::string& s, std::size_t base,
                              const std::string& what) {
    std::string t = trim(s);
    if (t.empty() || t.front() != '[' || t.back() != ']')
        throw std::invalid_argument(what + ": expected a bracketed list, got '" + s + "'");
    std::size_t open = base + s.find('[');
    std::string body = t.substr(1, t.size() - 2);
    std::vector<Token> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
        bool at_end = i == body.size();
        char ch = at_end ? ',' : body[i];
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if ((ch == ',' || ch == ';') && depth == 0) {
            std::string elem = trim(body.substr(start, i - start));
            if (elem.empty() && at_end && out.empty()) break;  // "[]"
            if (elem.empty())
                throw std::invalid_argument(what + ": empty element in '" + s + "'");
            std::size_t lead = start;
            while (std::isspace(static_cast<unsigned char>(body[lead]))) ++lead;
            out.push_back({elem, open + 1 + lead});
            start = i + 1;
        }
    }
    return out;
}

std::string joined(const std::vector<std::string>& names) {
    std::string out;
    for (const std::string& n : names) {
        if (!out.empty()) out += ", ";
        out += n;
    }
    return out;
}

Rational parse_rational_at(const Token& t, const std::string& spec) {
    try {
        return parse_rational(t.text);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string(e.what()) + " at position " +
                                    std::to_string(t.pos) + " of '" + spec + "'");
    }
}

void need_args(const std::vector<Token>& args, std::size_t n, const std::string& head) {
    if (args.size() != n)
        throw std::invalid_argument(head + ": expected " + std::to_string(n) +
                                    " argument(s), got " + std::to_string(args.size()));
}

// The gadget instances the galleries expose. Fixed parameters so the same
// name always denotes the same object.
Colouring gallery_colouring() {
    return Colouring{[](std::uint64_t i) -> std::uint64_t { return i < 5 ? 3 : 1; }, 3};
}

Colouring gallery_quiescence() {
    return Colouring{[](std::uint64_t j) -> std::uint64_t {
                         return j < 2 ? 0 : j < 4 ? 1 : 2;
                     },
                     2};
}

}  // namespace

std::vector<std::string> function_names() {
    return {"abs",      "affine", "const",       "hat-gallery",
            "identity", "poly",   "step-gallery"};
}

ContinuousFn make_function(const std::string& spec) {
    Split s = split_head(spec);
    if (s.head == "identity") {
        need_args(split_words(s.rest, s.rest_pos), 0, s.head);
        return fn_identity();
    }
    if (s.head == "abs") {
        need_args(split_words(s.rest, s.rest_pos), 0, s.head);
        return fn_abs();
    }
    if (s.head == "const") {
        std::vector<Token> args = split_words(s.rest, s.rest_pos);
        need_args(args, 1, s.head);
        return fn_const(parse_rational_at(args[0], spec));
    }
    if (s.head == "affine") {
        std::vector<Token> args = split_words(s.rest, s.rest_pos);
        need_args(args, 2, s.head);
        return fn_affine(parse_rational_at(args[0], spec),
                         parse_rational_at(args[1], spec));
    }
    if (s.head == "poly") {
        std::vector<Rational> coeffs;
        for (const Token& c : split_list(s.rest, s.rest_pos, s.head))
            coeffs.push_back(parse_rational_at(c, spec));
        return fn_poly(coeffs);
    }
    if (s.head == "hat-gallery") {
        need_args(split_words(s.rest, s.rest_pos), 0, s.head);
        return hat_function([](std::uint64_t n) -> Rational {
            return make_rational(1, static_cast<long>(n) + 2);
        });
    }
    if (s.head == "step-gallery") {
        need_args(split_words(s.rest, s.rest_pos), 0, s.head);
        return step_gadget(gallery_colouring()).h;
    }
    throw std::invalid_argument("unknown function '" + s.head +
                                "'; available: " + joined(function_names()));
}

std::vector<std::string> open_set_names() {
    return {"ball", "interval", "union", "gallery:quiet", "gallery:recurring"};
}

OpenSetCode make_open_set(const std::string& spec) {
    Split s = split_head(spec);
    if (s.head == "ball") {
        std::vector<Token> args = split_words(s.rest, s.rest_pos);
        need_args(args, 2, s.head);
        return from_balls({{parse_rational_at(args[0], spec),
                            parse_rational_at(args[1], spec)}});
    }
    if (s.head == "interval") {
        std::vector<Token> args = split_words(s.rest, s.rest_pos);
        need_args(args, 2, s.head);
        Rational a = parse_rational_at(args[0], spec);
        Rational b = parse_rational_at(args[1], spec);
        if (!(a < b))
            throw std::invalid_argument("interval: need a < b, got " + a.get_str() +
                                        " and " + b.get_str());
        return from_balls({{(a + b) / 2, (b - a) / 2}});
    }
    if (s.head == "union") {
        std::vector<OpenSetCode> parts;
        for (const Token& e : split_list(s.rest, s.rest_pos, s.head))
            parts.push_back(make_open_set(e.text));
        return union_sets(parts);
    }
    if (s.head == "gallery:quiet") return intersection_gadget(gallery_quiescence())(0);
    if (s.head == "gallery:recurring") return intersection_gadget(gallery_quiescence())(2);
    throw std::invalid_argument("unknown open set '" + s.head +
                                "'; available: " + joined(open_set_names()));
}

std::vector<std::string> cover_names() {
    return {"list", "gallery:two-ball", "gallery:adversarial"};
}

std::vector<OpenSetCode> make_cover(const std::string& spec) {
    Split s = split_head(spec);
    if (s.head == "list") {
        std::vector<OpenSetCode> parts;
        for (const Token& e : split_list(s.rest, s.rest_pos, s.head))
            parts.push_back(make_open_set(e.text));
        return parts;
    }
    if (s.head == "gallery:two-ball") {
        return {make_open_set("ball 0 2/3"), make_open_set("ball 1 2/3")};
    }
    if (s.head == "gallery:adversarial") {
        // One component that admits, at stage i, exactly the balls of radius
        // 1/(i+2): every stage looks covered, no admission survives a window.
        OpenSetCode shifting(
            [](std::uint64_t i, const Rational&, const Rational& r) -> bool {
                return r == Rational(1) / Rational(Integer(i + 2));
            });
        return {shifting};
    }
    throw std::invalid_argument("unknown cover '" + s.head +
                                "'; available: " + joined(cover_names()));
}

}  // namespace slowreal
