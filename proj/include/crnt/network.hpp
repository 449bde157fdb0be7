#pragma once

#include "crnt/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crnt {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& msg);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class NetworkError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Species {
    std::size_t id = 0;
    std::string name;
};

using Complex = std::vector<std::int64_t>;

struct Reaction {
    std::string label;
    std::size_t source = 0;
    std::size_t product = 0;
    std::optional<double> rate;
};

class Network {
public:
    Network() = default;
    explicit Network(std::vector<std::string> species_names);

    // Registers a species if it is new and returns its index. Existing complexes are padded.
    std::size_t add_species(const std::string& name);
    std::optional<std::size_t> find_species(const std::string& name) const;
    // Returns the index of the complex, adding it if it is new.
    std::size_t add_complex(const Complex& y);
    std::optional<std::size_t> find_complex(const Complex& y) const;
    // Appends a reaction; throws NetworkError on identical sides or a duplicate pair.
    std::size_t add_reaction(const std::string& label, const Complex& source, const Complex& product,
                             std::optional<double> rate = std::nullopt);

    const std::vector<Species>& species() const { return species_; }
    const std::vector<Complex>& complexes() const { return complexes_; }
    const std::vector<Reaction>& reactions() const { return reactions_; }
    std::size_t n() const { return species_.size(); }
    std::size_t c() const { return complexes_.size(); }
    std::size_t m() const { return reactions_.size(); }

    const Complex& source(std::size_t r) const { return complexes_[reactions_[r].source]; }
    const Complex& product(std::size_t r) const { return complexes_[reactions_[r].product]; }
    std::optional<std::size_t> find_reaction(const std::string& label) const;
    bool has_all_rates() const;
    std::vector<double> rates() const;

    std::string format_complex(const Complex& y) const;
    std::string format_complex(std::size_t idx) const { return format_complex(complexes_[idx]); }

private:
    std::vector<Species> species_;
    std::vector<Complex> complexes_;
    std::vector<Reaction> reactions_;
};

Network parse_network(const std::string& text);
Network load_network(const std::string& path);
std::string serialize_network(const Network& net);

// Parses a complex written as "0" or "A + 2 B" against the species of net.
Complex parse_complex(const Network& net, const std::string& text);

struct Matrices {
    IntMatrix Y;
    IntMatrix Ia;
    IntMatrix Gamma;
    IntMatrix GammaMinus;
    IntMatrix GammaPlus;
};

Matrices matrices(const Network& net);

struct StructureReport {
    std::size_t n = 0;
    std::size_t c = 0;
    std::size_t m = 0;
    std::size_t l = 0;
    std::size_t s = 0;
    long deficiency = 0;
    std::vector<std::vector<std::size_t>> linkage_classes;
    std::vector<std::vector<std::size_t>> strong_linkage_classes;
    std::vector<std::size_t> terminal_slcs;  // indices into strong_linkage_classes
    bool weakly_reversible = false;
    std::vector<std::size_t> source_complexes;

    std::size_t linkage_class_of(std::size_t complex) const;
    std::size_t slc_of(std::size_t complex) const;
    bool is_terminal(std::size_t complex) const;
};

StructureReport analyze(const Network& net);

}  // namespace crnt
