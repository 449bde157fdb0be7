#include "crnt/network.hpp"

#include "crnt/exact_linalg.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

namespace crnt {

ParseError::ParseError(std::size_t line, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

Network::Network(std::vector<std::string> species_names) {
    for (auto& s : species_names) add_species(s);
}

std::size_t Network::add_species(const std::string& name) {
    if (auto i = find_species(name)) return *i;
    species_.push_back({species_.size(), name});
    for (auto& y : complexes_) y.push_back(0);
    return species_.size() - 1;
}

std::optional<std::size_t> Network::find_species(const std::string& name) const {
    for (const auto& s : species_)
        if (s.name == name) return s.id;
    return std::nullopt;
}

std::size_t Network::add_complex(const Complex& y) {
    if (y.size() != n()) throw NetworkError("complex has wrong length");
    for (auto v : y)
        if (v < 0) throw NetworkError("complex has a negative coefficient");
    if (auto i = find_complex(y)) return *i;
    complexes_.push_back(y);
    return complexes_.size() - 1;
}

std::optional<std::size_t> Network::find_complex(const Complex& y) const {
    for (std::size_t i = 0; i < complexes_.size(); ++i)
        if (complexes_[i] == y) return i;
    return std::nullopt;
}

std::size_t Network::add_reaction(const std::string& label, const Complex& source, const Complex& product,
                                  std::optional<double> rate) {
    if (source == product) throw NetworkError("reaction " + label + " has identical sides");
    if (rate && !(*rate > 0.0 && std::isfinite(*rate)))
        throw NetworkError("reaction " + label + " has a non-positive rate");
    for (const auto& r : reactions_)
        if (r.label == label) throw NetworkError("duplicate reaction label " + label);
    auto s = find_complex(source);
    auto p = find_complex(product);
    if (s && p)
        for (const auto& r : reactions_)
            if (r.source == *s && r.product == *p) throw NetworkError("duplicate reaction " + label);
    std::size_t si = add_complex(source);
    std::size_t pi = add_complex(product);
    reactions_.push_back({label, si, pi, rate});
    return reactions_.size() - 1;
}

std::optional<std::size_t> Network::find_reaction(const std::string& label) const {
    for (std::size_t i = 0; i < reactions_.size(); ++i)
        if (reactions_[i].label == label) return i;
    return std::nullopt;
}

bool Network::has_all_rates() const {
    return std::all_of(reactions_.begin(), reactions_.end(), [](const Reaction& r) { return r.rate.has_value(); });
}

std::vector<double> Network::rates() const {
    std::vector<double> k;
    for (const auto& r : reactions_) {
        if (!r.rate) throw NetworkError("reaction " + r.label + " has no rate");
        k.push_back(*r.rate);
    }
    return k;
}

std::string Network::format_complex(const Complex& y) const {
    std::string out;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (y[i] != 1) out += std::to_string(y[i]) + " ";
        out += species_[i].name;
    }
    return out.empty() ? "0" : out;
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(),
                       [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; });
}

struct Term {
    std::int64_t coeff;
    std::string name;
};

std::vector<Term> parse_side(const std::string& side, std::size_t line) {
    std::string s = trim(side);
    if (s.empty()) throw ParseError(line, "empty reaction side");
    if (s == "0") return {};
    std::vector<Term> terms;
    std::size_t start = 0;
    while (true) {
        auto plus = s.find('+', start);
        std::string t = trim(s.substr(start, plus == std::string::npos ? std::string::npos : plus - start));
        if (t.empty()) throw ParseError(line, "empty term in '" + s + "'");
        if (t[0] == '-') throw ParseError(line, "negative coefficient in '" + t + "'");
        std::size_t k = 0;
        while (k < t.size() && std::isdigit(static_cast<unsigned char>(t[k]))) ++k;
        if (k < t.size() && (t[k] == '.' || t[k] == '/'))
            throw ParseError(line, "fractional coefficient in '" + t + "'");
        std::int64_t coeff = 1;
        if (k > 0) {
            if (k > 15) throw ParseError(line, "coefficient too large in '" + t + "'");
            coeff = std::stoll(t.substr(0, k));
            if (coeff == 0) throw ParseError(line, "zero coefficient in '" + t + "'");
        }
        std::string name = trim(t.substr(k));
        if (name == "0" && k == 0) throw ParseError(line, "zero complex cannot be combined with species");
        if (!is_identifier(name)) throw ParseError(line, "invalid species name '" + name + "'");
        bool merged = false;
        for (auto& e : terms)
            if (e.name == name) {
                e.coeff += coeff;
                merged = true;
            }
        if (!merged) terms.push_back({coeff, name});
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    return terms;
}

std::vector<double> parse_rates(const std::string& text, std::size_t line) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string t = trim(item);
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(t, &used);
        } catch (const std::exception&) {
            throw ParseError(line, "invalid rate '" + t + "'");
        }
        if (used != t.size()) throw ParseError(line, "invalid rate '" + t + "'");
        if (!(v > 0.0) || !std::isfinite(v)) throw ParseError(line, "rate must be positive: '" + t + "'");
        out.push_back(v);
    }
    if (out.empty() || out.size() > 2) throw ParseError(line, "expected one or two rates");
    return out;
}

}  // namespace

Network parse_network(const std::string& text) {
    Network net;
    std::stringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    struct Pending {
        std::string label;
        std::vector<Term> lhs, rhs;
        std::optional<double> rate;
        std::size_t line;
    };
    std::vector<Pending> pending;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
        line = trim(line);
        if (line.empty()) continue;

        std::vector<double> rates;
        if (auto lb = line.find('['); lb != std::string::npos) {
            auto rb = line.find(']', lb);
            if (rb == std::string::npos || trim(line.substr(rb + 1)) != "")
                throw ParseError(lineno, "malformed rate list");
            rates = parse_rates(line.substr(lb + 1, rb - lb - 1), lineno);
            line = trim(line.substr(0, lb));
        }

        bool reversible = false;
        std::size_t arrow = line.find("<->");
        std::size_t arrow_len = 3;
        if (arrow != std::string::npos) {
            reversible = true;
        } else {
            arrow = line.find("->");
            arrow_len = 2;
        }
        if (arrow == std::string::npos) throw ParseError(lineno, "missing arrow");
        if (line.find("->", arrow + arrow_len) != std::string::npos) throw ParseError(lineno, "more than one arrow");

        std::string left = line.substr(0, arrow);
        std::string right = line.substr(arrow + arrow_len);
        std::string label;
        if (auto colon = left.find(':'); colon != std::string::npos) {
            label = trim(left.substr(0, colon));
            if (!is_identifier(label)) throw ParseError(lineno, "invalid label '" + label + "'");
            left = left.substr(colon + 1);
        }
        if (label.empty()) label = "r" + std::to_string(pending.size() + 1);

        auto lhs = parse_side(left, lineno);
        auto rhs = parse_side(right, lineno);
        if (reversible) {
            if (rates.size() == 1) throw ParseError(lineno, "reversible reaction expects two rates");
            std::optional<double> kf, kr;
            if (rates.size() == 2) {
                kf = rates[0];
                kr = rates[1];
            }
            pending.push_back({label + "_f", lhs, rhs, kf, lineno});
            pending.push_back({label + "_r", rhs, lhs, kr, lineno});
        } else {
            if (rates.size() == 2) throw ParseError(lineno, "irreversible reaction expects one rate");
            std::optional<double> k;
            if (rates.size() == 1) k = rates[0];
            pending.push_back({label, lhs, rhs, k, lineno});
        }
    }
    if (pending.empty()) throw ParseError(lineno == 0 ? 1 : lineno, "empty network: no reactions");

    for (const auto& p : pending) {
        for (const auto& t : p.lhs) net.add_species(t.name);
        for (const auto& t : p.rhs) net.add_species(t.name);
    }
    for (const auto& p : pending) {
        Complex a(net.n(), 0), b(net.n(), 0);
        for (const auto& t : p.lhs) a[*net.find_species(t.name)] = t.coeff;
        for (const auto& t : p.rhs) b[*net.find_species(t.name)] = t.coeff;
        if (a == b) throw ParseError(p.line, "reaction " + p.label + " has identical sides");
        try {
            net.add_reaction(p.label, a, b, p.rate);
        } catch (const NetworkError& e) {
            throw ParseError(p.line, e.what());
        }
    }
    return net;
}

Network load_network(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw NetworkError("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_network(ss.str());
}

namespace {
std::string format_rate(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}
}  // namespace

std::string serialize_network(const Network& net) {
    std::string out;
    for (const auto& r : net.reactions()) {
        out += r.label + ": " + net.format_complex(r.source) + " -> " + net.format_complex(r.product);
        if (r.rate) out += " [" + format_rate(*r.rate) + "]";
        out += "\n";
    }
    return out;
}

Complex parse_complex(const Network& net, const std::string& text) {
    auto terms = parse_side(text, 0);
    Complex y(net.n(), 0);
    for (const auto& t : terms) {
        auto i = net.find_species(t.name);
        if (!i) throw NetworkError("unknown species " + t.name);
        y[*i] = t.coeff;
    }
    return y;
}

Matrices matrices(const Network& net) {
    std::size_t n = net.n(), c = net.c(), m = net.m();
    Matrices out{IntMatrix(n, c), IntMatrix(c, m), IntMatrix(n, m), IntMatrix(n, m), IntMatrix(n, m)};
    for (std::size_t j = 0; j < c; ++j)
        for (std::size_t i = 0; i < n; ++i) out.Y(i, j) = net.complexes()[j][i];
    for (std::size_t r = 0; r < m; ++r) {
        const auto& rx = net.reactions()[r];
        out.Ia(rx.source, r) = -1;
        out.Ia(rx.product, r) = 1;
        for (std::size_t i = 0; i < n; ++i) {
            out.GammaMinus(i, r) = net.complexes()[rx.source][i];
            out.GammaPlus(i, r) = net.complexes()[rx.product][i];
            out.Gamma(i, r) = out.GammaPlus(i, r) - out.GammaMinus(i, r);
        }
    }
    return out;
}

std::size_t StructureReport::linkage_class_of(std::size_t complex) const {
    for (std::size_t k = 0; k < linkage_classes.size(); ++k)
        for (auto v : linkage_classes[k])
            if (v == complex) return k;
    throw std::out_of_range("complex not in any linkage class");
}

std::size_t StructureReport::slc_of(std::size_t complex) const {
    for (std::size_t k = 0; k < strong_linkage_classes.size(); ++k)
        for (auto v : strong_linkage_classes[k])
            if (v == complex) return k;
    throw std::out_of_range("complex not in any strong linkage class");
}

bool StructureReport::is_terminal(std::size_t complex) const {
    auto k = slc_of(complex);
    return std::find(terminal_slcs.begin(), terminal_slcs.end(), k) != terminal_slcs.end();
}

namespace {

std::vector<std::vector<std::size_t>> canonical_partition(const std::vector<std::size_t>& label, std::size_t c) {
    std::vector<std::vector<std::size_t>> parts;
    std::vector<long> slot(c, -1);
    for (std::size_t v = 0; v < c; ++v) {
        auto l = label[v];
        if (slot[l] < 0) {
            slot[l] = static_cast<long>(parts.size());
            parts.emplace_back();
        }
        parts[slot[l]].push_back(v);
    }
    return parts;
}

// Tarjan's algorithm; returns the component label of every vertex.
std::vector<std::size_t> tarjan(const std::vector<std::vector<std::size_t>>& adj) {
    std::size_t c = adj.size();
    std::vector<long> index(c, -1), low(c, 0);
    std::vector<bool> on_stack(c, false);
    std::vector<std::size_t> stack, comp(c, 0);
    long counter = 0;
    std::size_t ncomp = 0;
    std::function<void(std::size_t)> visit = [&](std::size_t v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (auto w : adj[v]) {
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            while (true) {
                auto w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp[w] = ncomp;
                if (w == v) break;
            }
            ++ncomp;
        }
    };
    for (std::size_t v = 0; v < c; ++v)
        if (index[v] < 0) visit(v);
    return comp;
}

}  // namespace

StructureReport analyze(const Network& net) {
    StructureReport rep;
    rep.n = net.n();
    rep.c = net.c();
    rep.m = net.m();
    std::size_t c = net.c();

    std::vector<std::size_t> parent(c);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::vector<std::vector<std::size_t>> adj(c);
    for (const auto& r : net.reactions()) {
        parent[find(r.source)] = find(r.product);
        adj[r.source].push_back(r.product);
    }
    std::vector<std::size_t> lc_label(c);
    for (std::size_t v = 0; v < c; ++v) lc_label[v] = find(v);
    rep.linkage_classes = canonical_partition(lc_label, c);
    rep.l = rep.linkage_classes.size();

    auto scc = tarjan(adj);
    rep.strong_linkage_classes = canonical_partition(scc, c);
    std::vector<std::size_t> slc_index(c);
    for (std::size_t k = 0; k < rep.strong_linkage_classes.size(); ++k)
        for (auto v : rep.strong_linkage_classes[k]) slc_index[v] = k;
    std::vector<bool> terminal(rep.strong_linkage_classes.size(), true);
    for (const auto& r : net.reactions())
        if (slc_index[r.source] != slc_index[r.product]) terminal[slc_index[r.source]] = false;
    for (std::size_t k = 0; k < terminal.size(); ++k)
        if (terminal[k]) rep.terminal_slcs.push_back(k);
    rep.weakly_reversible = rep.strong_linkage_classes.size() == rep.linkage_classes.size();

    std::vector<bool> is_source(c, false);
    for (const auto& r : net.reactions()) is_source[r.source] = true;
    for (std::size_t v = 0; v < c; ++v)
        if (is_source[v]) rep.source_complexes.push_back(v);

    rep.s = rank(RationalMatrix(matrices(net).Gamma));
    rep.deficiency = static_cast<long>(rep.c) - static_cast<long>(rep.l) - static_cast<long>(rep.s);
    if (rep.deficiency < 0) throw std::logic_error("negative deficiency");
    return rep;
}

}  // namespace crnt
