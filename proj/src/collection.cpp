#include "zetalab/collection.hpp"

#include <numeric>
#include <stdexcept>

namespace zetalab {

Differences Differences::equal(double h) {
    Differences d;
    d.mode = DifferenceMode::equal;
    d.h = h;
    return d;
}

Differences Differences::per_family(double h1, std::vector<double> h2) {
    Differences d;
    d.mode = DifferenceMode::per_family;
    d.h1 = h1;
    d.h2 = std::move(h2);
    return d;
}

Differences Differences::per_sequence(double h1, std::vector<std::vector<double>> h2jl) {
    Differences d;
    d.mode = DifferenceMode::per_sequence;
    d.h1 = h1;
    d.h2jl = std::move(h2jl);
    return d;
}

std::size_t HurwitzCollection::component_count() const {
    std::size_t lambda = 0;
    for (const HurwitzFamily& f : families) lambda += f.sequences.size();
    return lambda;
}

double HurwitzCollection::phi_difference() const {
    return differences.mode == DifferenceMode::equal ? differences.h : differences.h1;
}

double HurwitzCollection::hurwitz_difference(std::size_t j, std::size_t l) const {
    switch (differences.mode) {
        case DifferenceMode::equal:
            return differences.h;
        case DifferenceMode::per_family:
            return differences.h2.at(j);
        case DifferenceMode::per_sequence:
            return differences.h2jl.at(j).at(l);
    }
    throw std::logic_error("unreachable");
}

void HurwitzCollection::validate() const {
    if (families.empty()) throw std::invalid_argument("HurwitzCollection: no families");
    for (const HurwitzFamily& f : families) {
        if (!(f.alpha > 0.0) || !(f.alpha < 1.0))
            throw std::invalid_argument("HurwitzCollection: alpha must lie in the open (0, 1)");
        if (f.sequences.empty())
            throw std::invalid_argument("HurwitzCollection: family without sequences");
        for (const PeriodicSequence& seq : f.sequences) seq.validate();
    }
    switch (differences.mode) {
        case DifferenceMode::equal:
            if (!(differences.h > 0.0))
                throw std::invalid_argument("HurwitzCollection: h must be positive");
            break;
        case DifferenceMode::per_family:
            if (!(differences.h1 > 0.0) || differences.h2.size() != families.size())
                throw std::invalid_argument("HurwitzCollection: per-family differences malformed");
            for (double h : differences.h2)
                if (!(h > 0.0))
                    throw std::invalid_argument("HurwitzCollection: differences must be positive");
            break;
        case DifferenceMode::per_sequence:
            if (!(differences.h1 > 0.0) || differences.h2jl.size() != families.size())
                throw std::invalid_argument("HurwitzCollection: per-sequence differences malformed");
            for (std::size_t j = 0; j < families.size(); ++j) {
                if (differences.h2jl[j].size() != families[j].sequences.size())
                    throw std::invalid_argument(
                        "HurwitzCollection: per-sequence differences malformed");
                for (double h : differences.h2jl[j])
                    if (!(h > 0.0))
                        throw std::invalid_argument(
                            "HurwitzCollection: differences must be positive");
            }
            break;
    }
}

CoefficientMatrix build_Bj_matrix(const HurwitzCollection& collection, std::size_t j) {
    if (j >= collection.families.size())
        throw std::invalid_argument("build_Bj_matrix: family index out of range");
    const HurwitzFamily& family = collection.families[j];
    std::size_t k_j = 1;
    for (const PeriodicSequence& seq : family.sequences)
        k_j = std::lcm(k_j, seq.period());
    CoefficientMatrix matrix;
    matrix.rows = k_j;
    matrix.cols = family.sequences.size();
    matrix.entries.resize(matrix.rows * matrix.cols);
    for (std::size_t m = 1; m <= k_j; ++m)
        for (std::size_t l = 0; l < matrix.cols; ++l)
            matrix.entries[(m - 1) * matrix.cols + l] =
                family.sequences[l].coeffs[(m - 1) % family.sequences[l].period()];
    return matrix;
}

std::vector<HurwitzCollection> presets() {
    std::vector<HurwitzCollection> out;

    {
        HurwitzCollection c;
        c.label = "alpha_pi";
        c.families = {{1.0 / kPi,
                       {PeriodicSequence{{Complex(1.0, 0.0)}},
                        PeriodicSequence{{Complex(1.0, 0.0), Complex(-1.0, 0.0)}}}}};
        c.differences = Differences::equal(1.0);
        out.push_back(std::move(c));
    }
    {
        HurwitzCollection c;
        c.label = "two_alphas";
        c.families = {
            {1.0 / kPi,
             {PeriodicSequence{{Complex(1.0, 0.0)}},
              PeriodicSequence{{Complex(1.0, 0.0), Complex(-1.0, 0.0)}}}},
            {0.36787944117144233,  // 1/e
             {PeriodicSequence{{Complex(1.0, 0.0), Complex(1.0, 0.0), Complex(-1.0, 0.0)}}}}};
        c.differences = Differences::per_family(1.0, {1.25, 0.75});
        out.push_back(std::move(c));
    }
    {
        HurwitzCollection c;
        c.label = "per_sequence_mix";
        c.families = {{0.7071067811865476,  // 1/sqrt(2)
                       {PeriodicSequence{{Complex(1.0, 0.0)}},
                        PeriodicSequence{{Complex(1.0, 0.0), Complex(0.0, 1.0), Complex(-1.0, 0.0),
                                          Complex(0.0, -1.0)}}}}};
        c.differences = Differences::per_sequence(1.0, {{0.7, 1.3}});
        out.push_back(std::move(c));
    }
    for (const HurwitzCollection& c : out) c.validate();
    return out;
}

const HurwitzCollection& preset_by_label(const std::string& label) {
    static const std::vector<HurwitzCollection> all = presets();
    for (const HurwitzCollection& c : all)
        if (c.label == label) return c;
    throw std::invalid_argument("unknown preset: " + label);
}

}  // namespace zetalab
