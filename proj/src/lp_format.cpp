#include "crnt/milp.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace crnt {

namespace {

std::string int_text(const Q& v, const std::string& where) {
    if (v.get_den() != 1) throw LpFormatError("non-integer coefficient in " + where);
    return v.get_num().get_str();
}

std::string linear_text(const MilpModel& model, const std::vector<LinearTerm>& terms, const std::string& where) {
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        if (sgn(t.coeff) == 0) continue;
        Q a = abs(t.coeff);
        std::string c = int_text(a, where);
        out += first ? (sgn(t.coeff) < 0 ? "- " : "") : (sgn(t.coeff) < 0 ? " - " : " + ");
        if (a != 1) out += c + " ";
        out += model.variables[t.var].name;
        first = false;
    }
    return out;
}

std::string bound_text(const std::optional<Q>& v, bool lower) {
    if (!v) return lower ? "-inf" : "+inf";
    return int_text(*v, "bounds");
}

}  // namespace

std::string export_lp(const MilpModel& model) {
    std::ostringstream out;
    out << "Minimize\n obj: ";
    std::string obj = linear_text(model, model.objective, "objective");
    out << (obj.empty() ? "0" : obj) << "\n";
    out << "Subject To\n";
    for (const auto& c : model.constraints) {
        std::string lhs = linear_text(model, c.terms, c.name);
        if (lhs.empty()) lhs = "0 " + (model.variables.empty() ? std::string("x") : model.variables.front().name);
        const char* rel = c.rel == Relation::LessEq ? "<=" : c.rel == Relation::GreaterEq ? ">=" : "=";
        out << " " << c.name << ": " << lhs << " " << rel << " " << int_text(c.rhs, c.name) << "\n";
    }
    out << "Bounds\n";
    for (const auto& v : model.variables) {
        if (v.kind == VarKind::Binary) continue;
        if (!v.lower && !v.upper)
            out << " " << v.name << " free\n";
        else
            out << " " << bound_text(v.lower, true) << " <= " << v.name << " <= " << bound_text(v.upper, false) << "\n";
    }
    std::string general, binary;
    for (const auto& v : model.variables) {
        if (v.kind == VarKind::Integer) general += " " + v.name + "\n";
        if (v.kind == VarKind::Binary) binary += " " + v.name + "\n";
    }
    if (!general.empty()) out << "General\n" << general;
    if (!binary.empty()) out << "Binary\n" << binary;
    out << "End\n";
    return out.str();
}

namespace {

enum class Section { None, Objective, Constraints, Bounds, General, Binary, End };

std::string lower_case(std::string s) {
    for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return s;
}

std::optional<Section> section_header(const std::string& line) {
    std::string l = lower_case(line);
    if (l == "minimize" || l == "minimum" || l == "min") return Section::Objective;
    if (l == "subject to" || l == "such that" || l == "st" || l == "s.t.") return Section::Constraints;
    if (l == "bounds" || l == "bound") return Section::Bounds;
    if (l == "general" || l == "generals" || l == "gen") return Section::General;
    if (l == "binary" || l == "binaries" || l == "bin") return Section::Binary;
    if (l == "end") return Section::End;
    return std::nullopt;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> tokenize(const std::string& s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
        } else if (ch == '<' || ch == '>' || ch == '=') {
            std::string op(1, ch);
            ++i;
            if (i < s.size() && s[i] == '=') {
                if (ch != '=') op += '=';
                ++i;
            }
            if (op == "<") op = "<=";
            if (op == ">") op = ">=";
            out.push_back(op);
        } else if (ch == '+' || ch == '-') {
            out.emplace_back(1, ch);
            ++i;
        } else {
            std::size_t j = i;
            while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != '<' && s[j] != '>' &&
                   s[j] != '=' && s[j] != '+' && s[j] != '-')
                ++j;
            out.push_back(s.substr(i, j - i));
            i = j;
        }
    }
    return out;
}

bool is_number(const std::string& t) {
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Q parse_number(const std::string& t) {
    if (!is_number(t)) throw LpFormatError("expected integer, got '" + t + "'");
    return Q(Z(t));
}

class Reader {
public:
    MilpModel model;

    std::size_t var(const std::string& name) {
        auto it = index_.find(name);
        if (it != index_.end()) return it->second;
        std::size_t id = model.variables.size();
        model.variables.push_back({name, VarKind::Continuous, Q(0), std::nullopt});
        index_[name] = id;
        return id;
    }

    std::optional<std::size_t> lookup(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    // Parses "[+|-] [coef] name ..." from tokens[pos..end).
    std::vector<LinearTerm> linear(const std::vector<std::string>& toks, std::size_t pos, std::size_t end) {
        std::map<std::size_t, Q> acc;
        std::vector<std::size_t> order;
        while (pos < end) {
            int sign = 1;
            while (pos < end && (toks[pos] == "+" || toks[pos] == "-")) {
                if (toks[pos] == "-") sign = -sign;
                ++pos;
            }
            if (pos >= end) throw LpFormatError("dangling sign in linear expression");
            Q coef = 1;
            if (is_number(toks[pos])) {
                coef = parse_number(toks[pos]);
                ++pos;
                if (pos >= end || toks[pos] == "+" || toks[pos] == "-") {
                    if (sgn(coef) != 0) throw LpFormatError("constant term in linear expression");
                    continue;
                }
            }
            std::size_t v = var(toks[pos]);
            ++pos;
            if (!acc.count(v)) order.push_back(v);
            acc[v] += sign * coef;
        }
        std::vector<LinearTerm> terms;
        for (auto v : order) terms.push_back({v, acc[v]});
        return terms;
    }

    Q signed_number(const std::vector<std::string>& toks, std::size_t& pos) {
        int sign = 1;
        while (pos < toks.size() && (toks[pos] == "+" || toks[pos] == "-")) {
            if (toks[pos] == "-") sign = -sign;
            ++pos;
        }
        if (pos >= toks.size()) throw LpFormatError("missing number");
        Q v = parse_number(toks[pos++]);
        return sign * v;
    }

    std::optional<Q> bound_value(const std::vector<std::string>& toks, std::size_t& pos, bool& infinite) {
        std::size_t save = pos;
        int sign = 1;
        while (pos < toks.size() && (toks[pos] == "+" || toks[pos] == "-")) {
            if (toks[pos] == "-") sign = -sign;
            ++pos;
        }
        if (pos < toks.size()) {
            std::string l = lower_case(toks[pos]);
            if (l == "inf" || l == "infinity") {
                ++pos;
                infinite = true;
                (void)sign;
                return std::nullopt;
            }
        }
        pos = save;
        infinite = false;
        return signed_number(toks, pos);
    }

    void objective(const std::string& text) {
        std::string body = text;
        auto colon = body.find(':');
        if (colon != std::string::npos) body = body.substr(colon + 1);
        auto toks = tokenize(body);
        model.objective = linear(toks, 0, toks.size());
    }

    void constraint(const std::string& text) {
        auto colon = text.find(':');
        if (colon == std::string::npos) throw LpFormatError("constraint without a name: " + text);
        std::string name = trim(text.substr(0, colon));
        auto toks = tokenize(text.substr(colon + 1));
        std::size_t op = toks.size();
        for (std::size_t i = 0; i < toks.size(); ++i)
            if (toks[i] == "<=" || toks[i] == ">=" || toks[i] == "=") {
                op = i;
                break;
            }
        if (op == toks.size()) throw LpFormatError("constraint " + name + " has no relation");
        Constraint c;
        c.name = name;
        c.terms = linear(toks, 0, op);
        c.rel = toks[op] == "<=" ? Relation::LessEq : toks[op] == ">=" ? Relation::GreaterEq : Relation::Equal;
        std::size_t pos = op + 1;
        c.rhs = signed_number(toks, pos);
        if (pos != toks.size()) throw LpFormatError("trailing tokens in constraint " + name);
        auto us = name.find('_');
        auto fam = family_from_string(name.substr(0, us));
        if (!fam) throw LpFormatError("constraint name " + name + " has no known family prefix");
        c.family = *fam;
        model.constraints.push_back(std::move(c));
    }

    void bound(const std::string& text) {
        auto toks = tokenize(text);
        if (toks.size() == 2 && lower_case(toks[1]) == "free") {
            auto v = var(toks[0]);
            model.variables[v].lower.reset();
            model.variables[v].upper.reset();
            return;
        }
        // forms: l <= x <= u, x <= u, x >= l, x = v, l <= x
        std::size_t pos = 0;
        bool inf = false;
        if (!toks.empty() && !is_name(toks[0])) {
            auto lo = bound_value(toks, pos, inf);
            if (pos >= toks.size()) throw LpFormatError("bad bound: " + text);
            std::string rel = toks[pos++];
            if (pos >= toks.size()) throw LpFormatError("bad bound: " + text);
            auto v = var(toks[pos++]);
            apply(v, rel == "<=" ? ">=" : rel == ">=" ? "<=" : "=", lo, inf);
            if (pos < toks.size()) {
                std::string rel2 = toks[pos++];
                auto hi = bound_value(toks, pos, inf);
                apply(v, rel2, hi, inf);
            }
        } else {
            if (toks.size() < 3) throw LpFormatError("bad bound: " + text);
            auto v = var(toks[0]);
            pos = 1;
            std::string rel = toks[pos++];
            auto val = bound_value(toks, pos, inf);
            apply(v, rel, val, inf);
        }
        if (pos != toks.size()) throw LpFormatError("bad bound: " + text);
    }

    void mark(const std::string& text, VarKind kind) {
        for (const auto& t : tokenize(text)) {
            auto v = var(t);
            model.variables[v].kind = kind;
            if (kind == VarKind::Binary) {
                model.variables[v].lower = Q(0);
                model.variables[v].upper = Q(1);
            }
        }
    }

private:
    static bool is_name(const std::string& t) {
        if (t.empty() || is_number(t) || t == "+" || t == "-") return false;
        std::string l = lower_case(t);
        return l != "inf" && l != "infinity";
    }

    // x rel value
    void apply(std::size_t v, const std::string& rel, const std::optional<Q>& val, bool inf) {
        auto& var = model.variables[v];
        if (rel == "<=") {
            var.upper = inf ? std::nullopt : val;
        } else if (rel == ">=") {
            var.lower = inf ? std::nullopt : val;
        } else if (rel == "=") {
            if (inf) throw LpFormatError("infinite fixed bound on " + var.name);
            var.lower = val;
            var.upper = val;
        } else {
            throw LpFormatError("bad bound relation " + rel);
        }
    }

    std::map<std::string, std::size_t> index_;
};

}  // namespace

MilpModel parse_lp(const std::string& text) {
    Reader rd;
    Section sec = Section::None;
    std::vector<std::pair<Section, std::string>> statements;
    std::string pending;
    Section pending_sec = Section::None;
    auto flush = [&]() {
        if (!trim(pending).empty()) statements.emplace_back(pending_sec, trim(pending));
        pending.clear();
    };
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        auto bs = raw.find('\\');
        if (bs != std::string::npos) raw = raw.substr(0, bs);
        std::string line = trim(raw);
        if (line.empty()) continue;
        if (auto h = section_header(line)) {
            flush();
            sec = *h;
            if (sec == Section::End) break;
            continue;
        }
        if (sec == Section::None) throw LpFormatError("content before objective section: " + line);
        // continuation lines carry no "name:" and extend the previous statement
        bool starts_new = true;
        if (sec == Section::Objective) starts_new = pending.empty() || pending_sec != sec;
        if (sec == Section::Constraints)
            starts_new = pending.empty() || pending_sec != sec || line.find(':') != std::string::npos;
        if (starts_new) {
            flush();
            pending_sec = sec;
            pending = line;
        } else {
            pending += " " + line;
        }
    }
    flush();
    for (const auto& [s, stmt] : statements) {
        switch (s) {
            case Section::Objective: rd.objective(stmt); break;
            case Section::Constraints: rd.constraint(stmt); break;
            case Section::Bounds: rd.bound(stmt); break;
            case Section::General: rd.mark(stmt, VarKind::Integer); break;
            case Section::Binary: rd.mark(stmt, VarKind::Binary); break;
            default: break;
        }
    }
    return rd.model;
}

}  // namespace crnt
