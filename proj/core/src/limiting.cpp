#include "ringwalk/limiting.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

namespace ringwalk {
namespace {

void require_even(const LatticeSpec& lattice, const char* what) {
    if (lattice.size() % 2 != 0) {
        std::ostringstream os;
        os << what << " requires an even node count, got N = " << lattice.size();
        throw ConstraintError(os.str());
    }
}

LimitingDistribution two_level_distribution(int node_count, int source, double at_source,
                                            double elsewhere, const LatticeSpec& lattice) {
    LimitingDistribution out{lattice, source, std::vector<double>(node_count, elsewhere), {}};
    out.values[source] = at_source;
    return out;
}

}  // namespace

LimitingDistribution limiting_distribution(const LatticeSpec& lattice, int source) {
    const int n = lattice.size();
    lattice.require_node(source, "source");
    const Spectrum spec = bloch_eigenvalues(lattice);
    DegeneracyPartition partition = degeneracy_partition(spec);

    LimitingDistribution out{lattice, source, std::vector<double>(n, 0.0), {}};
    for (int d = 0; d < n; ++d) {
        double chi = 0.0;
        for (const auto& cls : partition.classes) {
            std::complex<double> s(0.0, 0.0);
            for (int idx : cls) {
                const double angle = -d * spec.phases[idx];
                s += std::complex<double>(std::cos(angle), std::sin(angle));
            }
            chi += std::norm(s);
        }
        out.values[(source + d) % n] = chi / (static_cast<double>(n) * n);
    }
    out.partition = std::move(partition);
    return out;
}

LimitingDistribution closed_form_cycle(int node_count, int source) {
    const LatticeSpec lattice = LatticeSpec::ring(node_count, 1);
    lattice.require_node(source, "source");
    const long long n = node_count;
    const double n2 = static_cast<double>(n * n);
    if (node_count % 2 == 0) {
        const double anchor = static_cast<double>(2 * (n - 1)) / n2;
        const double rest = static_cast<double>(n - 2) / n2;
        LimitingDistribution out =
            two_level_distribution(node_count, source, anchor, rest, lattice);
        out.values[(source + node_count / 2) % node_count] = anchor;
        return out;
    }
    const double at_source = static_cast<double>(2 * n - 1) / n2;
    const double rest = static_cast<double>(n - 1) / n2;
    return two_level_distribution(node_count, source, at_source, rest, lattice);
}

LimitingDistribution complete_graph_limit(int node_count, int source) {
    if (node_count < 3 || node_count % 2 == 0) {
        std::ostringstream os;
        os << "complete ring lattice needs odd N = 2m+1 >= 3, got N = " << node_count;
        throw ConstraintError(os.str());
    }
    const LatticeSpec lattice = LatticeSpec::ring(node_count, (node_count - 1) / 2);
    lattice.require_node(source, "source");
    const long long n = node_count;
    const double n2 = static_cast<double>(n * n);
    const double at_source = static_cast<double>(n * n - 2 * n + 2) / n2;
    const double rest = 2.0 / n2;
    return two_level_distribution(node_count, source, at_source, rest, lattice);
}

double asymmetry_delta(const LatticeSpec& lattice, int source) {
    require_even(lattice, "mirror-node asymmetry");
    return general_mirror_asymmetry(lattice, source, 0);
}

double general_mirror_asymmetry(const LatticeSpec& lattice, int source, int offset) {
    require_even(lattice, "mirror-node asymmetry");
    if (offset % 2 != 0) {
        std::ostringstream os;
        os << "mirror asymmetry offset must be even, got " << offset;
        throw ConstraintError(os.str());
    }
    const int n = lattice.size();
    const LimitingDistribution chi = limiting_distribution(lattice, source);
    const int a = ((source + offset) % n + n) % n;
    const int b = (a + n / 2) % n;
    return (chi.at(a) - chi.at(b)) / (chi.at(a) + chi.at(b));
}

AsymmetryScan asymmetry_scan(int node_count, int m_lo, int m_hi, double threshold) {
    if (node_count % 2 != 0) {
        throw ConstraintError("asymmetry scan requires an even node count");
    }
    if (m_lo < 1 || m_hi < m_lo || m_hi > (node_count - 1) / 2) {
        std::ostringstream os;
        os << "m range [" << m_lo << ", " << m_hi << "] outside [1, "
           << (node_count - 1) / 2 << "]";
        throw ConstraintError(os.str());
    }
    AsymmetryScan scan;
    scan.node_count = node_count;
    scan.threshold = threshold;
    for (int m = m_lo; m <= m_hi; ++m) {
        const double delta = asymmetry_delta(LatticeSpec::ring(node_count, m));
        scan.m_values.push_back(m);
        scan.deltas.push_back(delta);
        if (std::abs(delta) > threshold) scan.nonzero_m.push_back(m);
    }
    return scan;
}

}  // namespace ringwalk
