#include "vqc/spectral.hpp"

#include "vqc/boson.hpp"
#include "vqc/fermion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

namespace vqc {

namespace {

constexpr double kPi = std::numbers::pi;

Complex unit_root(double turns) { return std::polar(1.0, 2.0 * kPi * turns); }

int permutation_sign(const std::vector<int>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

PointVector inverted(const PointVector& x) {
    PointVector out;
    out.reserve(x.size());
    for (const Complex& v : x) out.push_back(1.0 / v);
    return out;
}

Complex product(const PointVector& x) {
    Complex p = 1.0;
    for (const Complex& v : x) p *= v;
    return p;
}

// Matrix of a basis-level integer operator at formal variable 1; column j is the image of basis[j].
template <class Label>
ComplexMatrix matrix_at_one(const std::vector<Label>& basis,
                            const std::function<StateVector<Label>(const StateVector<Label>&)>& op) {
    std::map<Label, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
    ComplexMatrix m(static_cast<int>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const StateVector<Label> image = op(StateVector<Label>(basis[j]));
        for (const auto& [b, c] : image.terms()) {
            auto it = index.find(b);
            if (it == index.end()) throw std::logic_error("operator leaves the basis");
            m(it->second, static_cast<int>(j)) = Complex(c.at_one().template convert_to<double>(), 0.0);
        }
    }
    return m;
}

double max_abs_diff(const ComplexVector& a, const ComplexVector& b) {
    double best = 0;
    for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, std::abs(a[i] - b[i]));
    return best;
}

ComplexVector scaled(const ComplexVector& v, Complex s) {
    ComplexVector out(v);
    for (Complex& c : out) c *= s;
    return out;
}

struct SCache {
    std::vector<AffineWeight> weights;
    std::map<AffineWeight, int> index;
    ComplexMatrix s;
};

const SCache& cached_smatrix(int n, int k) {
    thread_local std::map<std::pair<int, int>, SCache> cache;
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
    SCache entry;
    entry.weights = affine_weights(n, k);
    for (std::size_t i = 0; i < entry.weights.size(); ++i) entry.index.emplace(entry.weights[i], static_cast<int>(i));
    entry.s = smatrix(n, k);
    return cache.emplace(std::make_pair(n, k), std::move(entry)).first->second;
}

struct BosonSpectrum {
    std::vector<BosonRoots> roots;
    std::vector<ComplexVector> vectors;
    std::vector<double> norms;
};

const BosonSpectrum& cached_boson_spectrum(int n, int k) {
    thread_local std::map<std::pair<int, int>, BosonSpectrum> cache;
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
    BosonSpectrum entry;
    entry.roots = bethe_roots_boson(n, k);
    for (const auto& r : entry.roots) {
        entry.vectors.push_back(bethe_vector_boson(r));
        entry.norms.push_back(hermitian_inner(entry.vectors.back(), entry.vectors.back()).real());
    }
    return cache.emplace(std::make_pair(n, k), std::move(entry)).first->second;
}

}  // namespace

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.size != b.size) throw std::invalid_argument("matrix size mismatch");
    ComplexMatrix out(a.size);
    for (int i = 0; i < a.size; ++i)
        for (int l = 0; l < a.size; ++l) {
            const Complex ail = a(i, l);
            if (ail == Complex{}) continue;
            for (int j = 0; j < a.size; ++j) out(i, j) += ail * b(l, j);
        }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix out(a.size);
    for (int i = 0; i < a.size; ++i)
        for (int j = 0; j < a.size; ++j) out(i, j) = std::conj(a(j, i));
    return out;
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.size != b.size) throw std::invalid_argument("matrix size mismatch");
    double best = 0;
    for (std::size_t i = 0; i < a.data.size(); ++i) best = std::max(best, std::abs(a.data[i] - b.data[i]));
    return best;
}

long long round_to_integer(Complex value, const std::string& context, double tolerance) {
    const double nearest = std::round(value.real());
    const double residual = std::abs(value - Complex(nearest, 0.0));
    if (!(residual < tolerance)) {
        std::ostringstream msg;
        msg << context << ": value " << value.real() << (value.imag() < 0 ? "-" : "+") << std::abs(value.imag())
            << "i is not within " << tolerance << " of an integer (residual " << residual << ")";
        throw ResidualError(msg.str(), residual);
    }
    return static_cast<long long>(nearest);
}

std::vector<double> bethe_momenta(const Partition& sigma, int k) {
    const Partition st = sigma.transpose();
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int j = 1; j <= k; ++j) out.push_back((k + 1) / 2.0 + st.part(k + 1 - j) - (k + 1 - j));
    return out;
}

std::vector<BosonRoots> bethe_roots_boson(int n, int k) {
    if (n < 2 || k < 0) throw std::invalid_argument("bethe_roots_boson needs n >= 2 and k >= 0");
    std::vector<BosonRoots> out;
    for (const Partition& sigma : partitions_in_box(n - 1, k)) {
        BosonRoots r{n, k, sigma, bethe_momenta(sigma, k), {}};
        const double shift = static_cast<double>(sigma.size()) / n;
        for (double i : r.I) r.x.push_back(unit_root((shift + i) / (k + n)));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<FermionRoots> bethe_roots_fermion(int n, int k) {
    if (n < 0 || k < 0 || n + k < 1) throw std::invalid_argument("bethe_roots_fermion needs N = n + k >= 1");
    std::vector<FermionRoots> out;
    for (const Partition& sigma : partitions_in_box(n, k)) {
        FermionRoots r{n, k, sigma, bethe_momenta(sigma, k), {}};
        for (double i : r.I) r.y.push_back(unit_root(i / (k + n)));
        out.push_back(std::move(r));
    }
    return out;
}

double bae_residual(const BosonRoots& r) {
    const Complex target = (r.k % 2 == 1 ? 1.0 : -1.0) * product(r.x);
    double best = 0;
    for (const Complex& x : r.x) best = std::max(best, std::abs(std::pow(x, r.n + r.k) - target));
    return best;
}

double bae2_residual(const BosonRoots& r) {
    if (r.k == 0) return 0.0;
    const std::vector<Complex> h = complete_all(r.n + r.k, r.x);
    const Complex ek = product(r.x);
    double best = std::abs(h[static_cast<std::size_t>(r.n)] - 1.0);
    for (int j = r.n + 1; j < r.n + r.k; ++j) best = std::max(best, std::abs(h[static_cast<std::size_t>(j)]));
    best = std::max(best, std::abs(h[static_cast<std::size_t>(r.n + r.k)] + (r.k % 2 == 0 ? 1.0 : -1.0) * ek));
    return best;
}

double freebae_residual(const FermionRoots& r) {
    const double target = r.k % 2 == 1 ? 1.0 : -1.0;
    double best = 0;
    for (const Complex& y : r.y) best = std::max(best, std::abs(std::pow(y, r.n + r.k) - target));
    return best;
}

double ideal_residual(const FermionRoots& r) {
    const int big_n = r.n + r.k;
    const std::vector<Complex> h = complete_all(big_n, r.y);
    double best = 0;
    for (int j = big_n - r.k + 1; j < big_n; ++j) best = std::max(best, std::abs(h[static_cast<std::size_t>(j)]));
    if (r.k > 0) best = std::max(best, std::abs(h[static_cast<std::size_t>(big_n)] + (r.k % 2 == 0 ? 1.0 : -1.0)));
    return best;
}

ComplexVector bethe_vector_boson(const BosonRoots& r) {
    const PointVector xinv = inverted(r.x);
    ComplexVector out;
    for (const AffineWeight& w : affine_weights(r.n, r.k)) out.push_back(schur_eval(weight_to_boxed(w).transpose(), xinv));
    return out;
}

ComplexVector bethe_vector_fermion(const FermionRoots& r) {
    const PointVector yinv = inverted(r.y);
    ComplexVector out;
    for (const Partition& lambda : partitions_in_box(r.k, r.n)) out.push_back(schur_eval(lambda, yinv));
    return out;
}

ComplexVector apply_matrix(const ComplexMatrix& m, const ComplexVector& v) {
    if (static_cast<int>(v.size()) != m.size) throw std::invalid_argument("vector size mismatch");
    ComplexVector out(v.size());
    for (int i = 0; i < m.size; ++i)
        for (int j = 0; j < m.size; ++j) out[static_cast<std::size_t>(i)] += m(i, j) * v[static_cast<std::size_t>(j)];
    return out;
}

Complex hermitian_inner(const ComplexVector& u, const ComplexVector& v) {
    if (u.size() != v.size()) throw std::invalid_argument("vector size mismatch");
    Complex acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
    return acc;
}

std::vector<double> finite_weight(const Partition& lambda, int n) {
    std::vector<double> out;
    const double mean = static_cast<double>(lambda.size()) / n;
    for (int i = 1; i <= n; ++i) out.push_back(lambda.part(i) - mean);
    return out;
}

std::vector<double> weyl_vector(int n) {
    std::vector<double> out;
    for (int i = 1; i <= n; ++i) out.push_back((n + 1) / 2.0 - i);
    return out;
}

ComplexMatrix smatrix(int n, int k) {
    if (n < 2 || n > 8) throw std::invalid_argument("smatrix supports 2 <= n <= 8");
    const std::vector<AffineWeight> weights = affine_weights(n, k);
    const int m = static_cast<int>(weights.size());
    const std::vector<double> rho = weyl_vector(n);
    std::vector<std::vector<double>> shifted;
    for (const AffineWeight& w : weights) {
        std::vector<double> v = finite_weight(weight_to_partition(w), n);
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] += rho[static_cast<std::size_t>(i)];
        shifted.push_back(std::move(v));
    }
    std::vector<std::vector<int>> perms;
    std::vector<int> signs;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
        signs.push_back(permutation_sign(p));
    } while (std::next_permutation(p.begin(), p.end()));

    const Complex phase = std::polar(1.0, kPi * n * (n - 1) / 4.0);
    const double norm = 1.0 / std::sqrt(n * std::pow(static_cast<double>(k + n), n - 1));
    ComplexMatrix s(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            Complex acc = 0;
            for (std::size_t w = 0; w < perms.size(); ++w) {
                double dot = 0;
                for (int i = 0; i < n; ++i)
                    dot += shifted[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)] *
                           shifted[static_cast<std::size_t>(a)][static_cast<std::size_t>(perms[w][static_cast<std::size_t>(i)])];
                acc += static_cast<double>(signs[w]) * unit_root(-dot / (k + n));
            }
            s(a, b) = phase * norm * acc;
        }
    return s;
}

double vandermonde_sin_squared(const Partition& sigma, int n, int k) {
    const std::vector<double> rho = weyl_vector(n);
    const std::vector<double> fw = finite_weight(sigma, n);
    double prod = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double pairing = fw[static_cast<std::size_t>(i)] + rho[static_cast<std::size_t>(i)] -
                                   fw[static_cast<std::size_t>(j)] - rho[static_cast<std::size_t>(j)];
            const double s = 2.0 * std::sin(kPi * pairing / (k + n));
            prod *= s * s;
        }
    return prod;
}

double s0_sin_product(const Partition& sigma, int n, int k) {
    const std::vector<double> rho = weyl_vector(n);
    const std::vector<double> fw = finite_weight(sigma, n);
    double prod = 1.0 / std::sqrt(n * std::pow(static_cast<double>(k + n), n - 1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double pairing = fw[static_cast<std::size_t>(i)] + rho[static_cast<std::size_t>(i)] -
                                   fw[static_cast<std::size_t>(j)] - rho[static_cast<std::size_t>(j)];
            prod *= 2.0 * std::sin(kPi * pairing / (k + n));
        }
    return prod;
}

ComplexVector tmatrix(int n, int k) {
    const std::vector<double> rho = weyl_vector(n);
    double rho2 = 0;
    for (double r : rho) rho2 += r * r;
    ComplexVector out;
    for (const AffineWeight& w : affine_weights(n, k)) {
        const std::vector<double> fw = finite_weight(weight_to_partition(w), n);
        double norm2 = 0;
        for (int i = 0; i < n; ++i) {
            const double v = fw[static_cast<std::size_t>(i)] + rho[static_cast<std::size_t>(i)];
            norm2 += v * v;
        }
        out.push_back(unit_root(norm2 / (2.0 * (k + n)) - rho2 / (2.0 * n)));
    }
    return out;
}

ComplexMatrix charge_conjugation(int n, int k) {
    const std::vector<AffineWeight> weights = affine_weights(n, k);
    std::map<AffineWeight, int> index;
    for (std::size_t i = 0; i < weights.size(); ++i) index.emplace(weights[i], static_cast<int>(i));
    ComplexMatrix c(static_cast<int>(weights.size()));
    for (std::size_t i = 0; i < weights.size(); ++i) c(index.at(flip(weights[i])), static_cast<int>(i)) = 1.0;
    return c;
}

long long verlinde_coeff(const AffineWeight& lambda, const AffineWeight& mu, const AffineWeight& nu) {
    if (lambda.rank() != mu.rank() || lambda.rank() != nu.rank() || lambda.level() != mu.level() ||
        lambda.level() != nu.level())
        throw std::invalid_argument("Verlinde formula needs weights of equal rank and level");
    const SCache& sc = cached_smatrix(lambda.rank(), lambda.level());
    const int a = sc.index.at(lambda);
    const int b = sc.index.at(mu);
    const int c = sc.index.at(flip(nu));
    const int unit = sc.index.at(AffineWeight::from_partition(Partition{}, lambda.rank(), lambda.level()));
    Complex acc = 0;
    for (int s = 0; s < sc.s.size; ++s) acc += sc.s(a, s) * sc.s(b, s) * sc.s(c, s) / sc.s(unit, s);
    return round_to_integer(acc, "Verlinde sum for " + lambda.str() + " x " + mu.str() + " -> " + nu.str());
}

long long bethe_fusion_coeff(const AffineWeight& lambda, const AffineWeight& mu, const AffineWeight& nu) {
    if (lambda.rank() != mu.rank() || lambda.rank() != nu.rank() || lambda.level() != mu.level() ||
        lambda.level() != nu.level())
        throw std::invalid_argument("Bethe expansion needs weights of equal rank and level");
    const int n = lambda.rank();
    const int k = lambda.level();
    const BosonSpectrum& spec = cached_boson_spectrum(n, k);
    const SCache& sc = cached_smatrix(n, k);
    const std::size_t im = static_cast<std::size_t>(sc.index.at(mu));
    const std::size_t in = static_cast<std::size_t>(sc.index.at(nu));
    const Partition lt = weight_to_partition(lambda).transpose();
    Complex acc = 0;
    for (std::size_t s = 0; s < spec.roots.size(); ++s) {
        const ComplexVector& b = spec.vectors[s];
        acc += schur_eval(lt, spec.roots[s].x) * std::conj(b[im]) * b[in] / spec.norms[s];
    }
    return round_to_integer(acc, "Bethe expansion for " + lambda.str() + " x " + mu.str() + " -> " + nu.str());
}

GwValue bvi_coeff(const Partition& lambda, const Partition& mu, const Partition& nu, int k, int big_n) {
    const int n = big_n - k;
    if (n < 0 || !lambda.fits(k, n) || !mu.fits(k, n) || !nu.fits(k, n))
        throw std::invalid_argument("BVI formula needs partitions in the k x n box");
    const int excess = lambda.size() + mu.size() - nu.size();
    if (excess < 0 || excess % big_n != 0) return {0, 0};
    const int d = excess / big_n;
    const Partition nu_dual = complement(nu, k, n);
    Complex acc = 0;
    for (const FermionRoots& r : bethe_roots_fermion(n, k)) {
        double van2 = 1;
        for (std::size_t i = 0; i < r.y.size(); ++i)
            for (std::size_t j = i + 1; j < r.y.size(); ++j) van2 *= std::norm(r.y[i] - r.y[j]);
        const double total_momentum = std::accumulate(r.I.begin(), r.I.end(), 0.0);
        const Complex twist = unit_root(-n * total_momentum / big_n);
        acc += schur_eval(lambda, r.y) * schur_eval(mu, r.y) * schur_eval(nu_dual, r.y) * twist * van2;
    }
    acc /= std::pow(static_cast<double>(big_n), k);
    return {d, round_to_integer(acc, "BVI sum for " + lambda.str() + " x " + mu.str() + " -> " + nu.str())};
}

double verify_transfer_eigen(const BosonRoots& r, Complex u) {
    Complex scalar = 1.0 + (r.k % 2 == 0 ? 1.0 : -1.0) * product(r.x) * std::pow(u, r.n + r.k);
    for (const Complex& x : r.x) {
        const Complex denom = 1.0 - u * x;
        if (std::abs(denom) < 1e-12) throw std::domain_error("spectral parameter hits a pole 1/x_i");
        scalar /= denom;
    }
    const ComplexVector b = bethe_vector_boson(r);
    const std::vector<AffineWeight> basis = affine_weights(r.n, r.k);
    ComplexVector lhs(b.size());
    Complex power = 1.0;
    for (int deg = 0; deg <= r.n; ++deg) {
        const ComplexMatrix er = matrix_at_one<AffineWeight>(basis, [&](const BosonState& v) { return nc_e_apply(deg, v); });
        const ComplexVector term = apply_matrix(er, b);
        for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] += power * term[i];
        power *= u;
    }
    return max_abs_diff(lhs, scaled(b, scalar));
}

double boson_eigen_residual(const BosonRoots& r) {
    const ComplexVector b = bethe_vector_boson(r);
    const std::vector<AffineWeight> basis = affine_weights(r.n, r.k);
    const std::vector<Complex> h = complete_all(r.n, r.x);
    double best = 0;
    for (int deg = 0; deg <= r.n; ++deg) {
        const ComplexMatrix er = matrix_at_one<AffineWeight>(basis, [&](const BosonState& v) { return nc_e_apply(deg, v); });
        best = std::max(best, max_abs_diff(apply_matrix(er, b), scaled(b, h[static_cast<std::size_t>(deg)])));
    }
    return best;
}

double fermion_eigen_residual(const FermionRoots& r) {
    const int big_n = r.n + r.k;
    const ComplexVector b = bethe_vector_fermion(r);
    const std::vector<Word01> basis = words_of_weight(big_n, r.k);
    const std::vector<Complex> e = elementary_all(big_n, r.y);
    const std::vector<Complex> h = complete_all(big_n, r.y);
    double best = 0;
    for (int deg = 1; deg < big_n; ++deg) {
        const ComplexMatrix er = matrix_at_one<Word01>(basis, [&](const FermionState& v) { return nc_e_u_apply(deg, v); });
        const ComplexMatrix hr = matrix_at_one<Word01>(basis, [&](const FermionState& v) { return nc_h_u_apply(deg, v); });
        best = std::max(best, max_abs_diff(apply_matrix(er, b), scaled(b, e[static_cast<std::size_t>(deg)])));
        best = std::max(best, max_abs_diff(apply_matrix(hr, b), scaled(b, h[static_cast<std::size_t>(deg)])));
    }
    return best;
}

namespace {

template <class Roots, class VectorFn>
NormReport measure_norms(const std::vector<Roots>& roots, VectorFn vector_of) {
    NormReport rep;
    std::vector<ComplexVector> vecs;
    for (const Roots& r : roots) {
        rep.sigmas.push_back(r.sigma);
        vecs.push_back(vector_of(r));
        rep.measured.push_back(hermitian_inner(vecs.back(), vecs.back()).real());
    }
    for (std::size_t a = 0; a < vecs.size(); ++a)
        for (std::size_t b = 0; b < vecs.size(); ++b)
            if (a != b) rep.max_orthogonality = std::max(rep.max_orthogonality, std::abs(hermitian_inner(vecs[a], vecs[b])));
    return rep;
}

}  // namespace

NormReport bethe_norm_check(int n, int k) {
    NormReport rep = measure_norms(bethe_roots_boson(n, k), [](const BosonRoots& r) { return bethe_vector_boson(r); });
    const double numerator = n * std::pow(static_cast<double>(n + k), n - 1);
    for (std::size_t i = 0; i < rep.sigmas.size(); ++i) {
        const double predicted = numerator / vandermonde_sin_squared(rep.sigmas[i], n, k);
        rep.predicted.push_back(predicted);
        rep.max_relative_error = std::max(rep.max_relative_error, std::abs(rep.measured[i] - predicted) / predicted);
    }
    return rep;
}

NormReport fermion_norm_report(int n, int k) {
    return measure_norms(bethe_roots_fermion(n, k), [](const FermionRoots& r) { return bethe_vector_fermion(r); });
}

}  // namespace vqc
