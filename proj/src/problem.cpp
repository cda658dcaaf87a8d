#include "cbcheck/problem.hpp"

#include <cctype>
#include <cstring>
#include <fstream>
#include <sstream>

namespace cbcheck {

namespace {

std::string strip(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string drop_comment(const std::string& s) {
    auto pos = s.find('#');
    return pos == std::string::npos ? s : s.substr(0, pos);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(strip(cur));
    return out;
}

FieldSpecPtr parse_field(const std::string& text, size_t line) {
    std::string s = strip(text);
    if (s == "Q" || s == "QQ") return FieldSpec::rationals();
    if (s.rfind("GF(", 0) == 0 && s.back() == ')') {
        std::string inner = s.substr(3, s.size() - 4);
        auto caret = inner.find('^');
        try {
            if (caret == std::string::npos) {
                return FieldSpec::prime_field(std::stoull(strip(inner)));
            }
            std::uint64_t p = std::stoull(strip(inner.substr(0, caret)));
            unsigned k = static_cast<unsigned>(std::stoul(strip(inner.substr(caret + 1))));
            if (k == 1) return FieldSpec::prime_field(p);
            return FieldSpec::extension_field(p, k);
        } catch (const FieldError&) {
            throw;
        } catch (const std::exception&) {
            throw ProblemError("line " + std::to_string(line) + ": bad field '" + s + "'");
        }
    }
    throw ProblemError("line " + std::to_string(line) + ": unknown field '" + s +
                       "' (expected Q, GF(p), or GF(p^k))");
}

}  // namespace

Problem parse_problem_text(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    size_t lineno = 0;

    FieldSpecPtr field;
    std::vector<std::string> vars;
    std::string order = "DegRevLex";
    std::vector<std::pair<std::string, size_t>> ideal_lines;
    struct RawComponent {
        std::vector<std::pair<std::string, size_t>> q, m;
    };
    std::vector<RawComponent> raw_components;

    enum class Section { None, Ideal, Component };
    Section section = Section::None;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip(drop_comment(raw));
        if (line.empty()) continue;

        auto starts = [&](const char* key) { return line.rfind(key, 0) == 0; };
        auto value_after = [&](const char* key) { return strip(line.substr(std::strlen(key))); };

        if (starts("field:")) {
            field = parse_field(value_after("field:"), lineno);
            section = Section::None;
        } else if (starts("vars:")) {
            vars = split(value_after("vars:"), ',');
            section = Section::None;
        } else if (starts("order:")) {
            order = value_after("order:");
            section = Section::None;
        } else if (starts("ideal:")) {
            section = Section::Ideal;
            std::string rest = value_after("ideal:");
            if (!rest.empty())
                for (auto& p : split(rest, ',')) ideal_lines.emplace_back(p, lineno);
        } else if (starts("component:")) {
            raw_components.emplace_back();
            section = Section::Component;
        } else if (section == Section::Component && (starts("Q:") || starts("M:"))) {
            auto& dst = starts("Q:") ? raw_components.back().q : raw_components.back().m;
            for (auto& p : split(value_after("Q:"), ','))
                if (!p.empty()) dst.emplace_back(p, lineno);
        } else if (section == Section::Ideal) {
            ideal_lines.emplace_back(line, lineno);
        } else {
            throw ProblemError("line " + std::to_string(lineno) + ": unexpected '" + line + "'");
        }
    }

    if (!field) throw ProblemError("missing 'field:' entry");
    if (vars.empty()) throw ProblemError("missing 'vars:' entry");
    for (const auto& v : vars)
        if (v.empty()) throw ProblemError("empty variable name in 'vars:'");
    if (order != "DegRevLex")
        throw ProblemError("unsupported order '" + order + "' (only DegRevLex)");
    if (ideal_lines.empty()) throw ProblemError("missing or empty 'ideal:' block");

    Problem prob;
    prob.field = field;
    prob.ring = PolyRing::make(vars, field);

    auto parse_all = [&](const std::vector<std::pair<std::string, size_t>>& lines) {
        std::vector<Polynomial> out;
        for (const auto& [src, ln] : lines) {
            try {
                out.push_back(parse_polynomial(src, prob.ring));
            } catch (const PolyError& e) {
                throw ProblemError("line " + std::to_string(ln) + ": " + e.what());
            }
        }
        return out;
    };

    prob.ideal = IdealHandle(prob.ring, parse_all(ideal_lines));
    for (const auto& rc : raw_components) {
        if (rc.q.empty() || rc.m.empty())
            throw ProblemError("component block needs both 'Q:' and 'M:' generator lists");
        prob.components.push_back(DecompositionComponent{
            IdealHandle(prob.ring, parse_all(rc.q)), IdealHandle(prob.ring, parse_all(rc.m))});
    }
    return prob;
}

Problem parse_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ProblemError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_text(buf.str());
}

}  // namespace cbcheck
