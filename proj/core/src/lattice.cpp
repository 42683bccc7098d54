#include "ringwalk/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace ringwalk {

LatticeSpec LatticeSpec::ring(int node_count, int connectivity) {
    if (node_count < 3) {
        std::ostringstream os;
        os << "ring lattice requires N >= 3, got N = " << node_count;
        throw ConstraintError(os.str());
    }
    const int m_max = (node_count - 1) / 2;
    if (connectivity < 1 || connectivity > m_max) {
        std::ostringstream os;
        os << "connectivity must satisfy 1 <= m <= floor((N-1)/2) = " << m_max
           << " for N = " << node_count << ", got m = " << connectivity;
        throw ConstraintError(os.str());
    }
    return LatticeSpec(node_count, connectivity);
}

LatticeSpec LatticeSpec::infinite(int connectivity) {
    if (connectivity < 1) {
        std::ostringstream os;
        os << "infinite lattice requires m >= 1, got m = " << connectivity;
        throw ConstraintError(os.str());
    }
    return LatticeSpec(0, connectivity);
}

int LatticeSpec::size() const {
    if (!is_finite()) throw ConstraintError("infinite lattice has no node count");
    return size_;
}

int LatticeSpec::ring_distance(int a, int b) const {
    const int n = size();
    int d = (b - a) % n;
    if (d < 0) d += n;
    return std::min(d, n - d);
}

void LatticeSpec::require_node(int node, const char* what) const {
    if (node < 0 || node >= size()) {
        std::ostringstream os;
        os << what << " node " << node << " out of range [0, " << size_ << ")";
        throw ConstraintError(os.str());
    }
}

double Spectrum::max_eigenvalue() const {
    return *std::max_element(eigenvalues.begin(), eigenvalues.end());
}

int DegeneracyPartition::class_of(int n) const {
    for (size_t c = 0; c < classes.size(); ++c) {
        if (std::binary_search(classes[c].begin(), classes[c].end(), n)) {
            return static_cast<int>(c);
        }
    }
    throw ConstraintError("index not covered by the partition");
}

IntMatrix build_laplacian(const LatticeSpec& lattice) {
    const int n = lattice.size();
    const int m = lattice.connectivity();
    IntMatrix out;
    out.n = n;
    out.a.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        out.at(i, i) = 2 * m;
        for (int z = 1; z <= m; ++z) {
            out.at(i, (i + z) % n) = -1;
            out.at(i, (i - z % n + n) % n) = -1;
        }
    }
    return out;
}

Spectrum bloch_eigenvalues(const LatticeSpec& lattice) {
    const int n = lattice.size();
    const int m = lattice.connectivity();
    Spectrum s{lattice, std::vector<double>(n), std::vector<double>(n)};
    for (int k = 0; k < n; ++k) {
        s.phases[k] = 2.0 * std::numbers::pi * k / n;
    }
    s.eigenvalues[0] = 0.0;
    // Mirror symmetry E_k = E_{N-k}: evaluate one half, copy the other.
    for (int k = 1; k <= n / 2; ++k) {
        double acc = 0.0;
        for (int j = 1; j <= m; ++j) {
            acc += std::cos(j * s.phases[k]);
        }
        const double value = 2.0 * m - 2.0 * acc;
        s.eigenvalues[k] = value;
        s.eigenvalues[n - k] = value;
    }
    return s;
}

double degeneracy_tolerance(int connectivity) {
    return 1e-9 * std::max(1.0, 2.0 * connectivity);
}

DegeneracyPartition degeneracy_partition(const Spectrum& spectrum) {
    const int n = static_cast<int>(spectrum.eigenvalues.size());
    const double tol = degeneracy_tolerance(spectrum.lattice.connectivity());

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return spectrum.eigenvalues[a] < spectrum.eigenvalues[b];
    });

    DegeneracyPartition part;
    part.tolerance = tol;
    std::vector<int> current{order[0]};
    for (int i = 1; i < n; ++i) {
        const double gap =
            spectrum.eigenvalues[order[i]] - spectrum.eigenvalues[order[i - 1]];
        if (gap <= tol) {
            current.push_back(order[i]);
        } else {
            part.classes.push_back(std::move(current));
            current = {order[i]};
        }
    }
    part.classes.push_back(std::move(current));

    for (auto& cls : part.classes) {
        std::sort(cls.begin(), cls.end());
        double lo = spectrum.eigenvalues[cls.front()];
        double hi = lo;
        for (int idx : cls) {
            lo = std::min(lo, spectrum.eigenvalues[idx]);
            hi = std::max(hi, spectrum.eigenvalues[idx]);
        }
        part.class_values.push_back(0.5 * (lo + hi));
        part.signature.push_back(static_cast<int>(cls.size()));
        if (hi - lo > tol) {
            std::ostringstream os;
            os << "class spread " << (hi - lo) << " exceeds tolerance " << tol;
            part.near_gap_warnings.push_back(os.str());
        }
    }
    std::sort(part.signature.begin(), part.signature.end());

    for (size_t c = 1; c < part.class_values.size(); ++c) {
        const double gap = part.class_values[c] - part.class_values[c - 1];
        if (gap <= 10.0 * tol) {
            std::ostringstream os;
            os << "inter-class gap " << gap << " between E ~ " << part.class_values[c - 1]
               << " and E ~ " << part.class_values[c] << " is within 10x of tolerance "
               << tol;
            part.near_gap_warnings.push_back(os.str());
        }
    }
    return part;
}

bool pattern_equivalent(int node_count, int m1, int m2) {
    const auto p1 = degeneracy_partition(bloch_eigenvalues(LatticeSpec::ring(node_count, m1)));
    const auto p2 = degeneracy_partition(bloch_eigenvalues(LatticeSpec::ring(node_count, m2)));
    if (p1.classes.size() != p2.classes.size()) return false;
    // Classes are keyed by their smallest index; eigenvalue order may differ
    // between the two spectra.
    auto canonical = [](const DegeneracyPartition& p) {
        std::vector<std::vector<int>> cls = p.classes;
        std::sort(cls.begin(), cls.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        return cls;
    };
    return canonical(p1) == canonical(p2);
}

}  // namespace ringwalk
