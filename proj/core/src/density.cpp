#include "bks/density.hpp"

#include <algorithm>
#include <cmath>

#include "bks/errors.hpp"

namespace bks::density {

namespace {

double abs_det(const Matrix& m) {
    if (m.rows() != m.cols()) throw ValidationError("determinant of non-square matrix");
    if (m.rows() == 0) return 1.0;
    return std::abs(m.partialPivLu().determinant());
}

double scale_of(const Matrix& m) { return m.size() == 0 ? 1.0 : std::max(1.0, m.cwiseAbs().maxCoeff()); }

Eigen::Index numeric_rank(const Matrix& m) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Matrix> svd(m);
    const auto& s = svd.singularValues();
    const double cut = kTolerance * std::max(1.0, s.size() ? s(0) : 0.0);
    Eigen::Index r = 0;
    for (Eigen::Index k = 0; k < s.size(); ++k)
        if (s(k) > cut) ++r;
    return r;
}

// Orthonormal basis of the column space.
Matrix column_space(const Matrix& m) {
    if (m.cols() == 0) return Matrix(m.rows(), 0);
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU);
    const Eigen::Index r = numeric_rank(m);
    return svd.matrixU().leftCols(r);
}

// Orthonormal basis of the orthogonal complement of the column space.
Matrix orthogonal_complement(const Matrix& m, Eigen::Index ambient) {
    if (m.cols() == 0) return Matrix::Identity(ambient, ambient);
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU);
    const Eigen::Index r = numeric_rank(m);
    return svd.matrixU().rightCols(ambient - r);
}

// Orthonormal basis of the null space.
Matrix null_space(const Matrix& m) {
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
    const Eigen::Index r = numeric_rank(m);
    return svd.matrixV().rightCols(m.cols() - r);
}

// Coordinates of the columns of `vectors` in the (full column rank) `basis`.
Matrix coordinates(const Matrix& basis, const Matrix& vectors) {
    if (basis.cols() == 0) return Matrix(0, vectors.cols());
    Matrix c = basis.colPivHouseholderQr().solve(vectors);
    if ((basis * c - vectors).norm() > kTolerance * scale_of(vectors) * std::max<Eigen::Index>(1, vectors.size()))
        throw ValidationError("vectors do not lie in the span of the given basis");
    return c;
}

// |det B| / (|det P| |det Q|) where B = [i P, C (j C)^{-1} Q]; the isomorphism
// is rho_V(ref) = rho_U(ref) rho_W(ref) / sqrt(factor).
double iso_factor(const ExactSequence& seq, const SeqIsoChoice& choice) {
    seq.validate();
    const auto du = static_cast<Eigen::Index>(seq.u().dim);
    const auto dw = static_cast<Eigen::Index>(seq.w().dim);
    const auto dv = static_cast<Eigen::Index>(seq.v().dim);
    const Matrix p = choice.u_basis.size() ? choice.u_basis : Matrix(Matrix::Identity(du, du));
    const Matrix q = choice.w_basis.size() ? choice.w_basis : Matrix(Matrix::Identity(dw, dw));
    const Matrix c = choice.complement.size() || dw == 0 ? choice.complement
                                                          : orthogonal_complement(seq.i.matrix, dv);
    if (p.rows() != du || p.cols() != du || q.rows() != dw || q.cols() != dw)
        throw ValidationError("basis choice has the wrong shape");
    Matrix lifted(dv, dw);
    if (dw > 0) {
        if (c.rows() != dv || c.cols() != dw) throw ValidationError("complement has the wrong shape");
        const Matrix jc = seq.j.matrix * c;
        if (numeric_rank(jc) != dw) throw ValidationError("chosen subspace is not a complement of ker j");
        lifted = c * jc.partialPivLu().solve(q);
    }
    Matrix b(dv, du + dw);
    b << seq.i.matrix * p, lifted;
    const double db = abs_det(b);
    if (db <= 0.0) throw ValidationError("assembled basis of V is singular");
    return db / (abs_det(p) * abs_det(q));
}

void require_half(const DensityValue& d, const SpaceRef& space, const char* what) {
    if (!(d.space == space)) throw ValidationError(std::string(what) + " lives on the wrong space");
    if (std::abs(d.order - 0.5) > 1e-15) throw ValidationError(std::string(what) + " must be a half-density");
}

Matrix standard_symplectic(Eigen::Index n) {
    Matrix omega = Matrix::Zero(2 * n, 2 * n);
    omega.topRightCorner(n, n) = Matrix::Identity(n, n);
    omega.bottomLeftCorner(n, n) = -Matrix::Identity(n, n);
    return omega;
}

void check_lagrangian_pair(const Matrix& omega, const Matrix& l1, const Matrix& l2) {
    if (omega.rows() != omega.cols() || omega.rows() % 2 != 0)
        throw ValidationError("symplectic form must be square of even dimension");
    if ((omega + omega.transpose()).norm() > kTolerance * scale_of(omega))
        throw ValidationError("form is not skew-symmetric");
    if (numeric_rank(omega) != omega.rows()) throw ValidationError("form is degenerate");
    const Eigen::Index half = omega.rows() / 2;
    for (const Matrix* l : {&l1, &l2}) {
        if (l->rows() != omega.rows() || l->cols() != half)
            throw ValidationError("Lagrangian basis must have dimension half the ambient dimension");
        if (numeric_rank(*l) != half) throw ValidationError("Lagrangian basis is not linearly independent");
        const Matrix iso = l->transpose() * omega * *l;
        if (iso.cwiseAbs().maxCoeff() > kTolerance * scale_of(omega) * scale_of(*l) * scale_of(*l))
            throw ValidationError("subspace is not isotropic");
    }
}

ExactSequence split_sequence(const SpaceRef& u, const SpaceRef& w, const SpaceRef& sum) {
    const auto du = static_cast<Eigen::Index>(u.dim);
    const auto dw = static_cast<Eigen::Index>(w.dim);
    Matrix i = Matrix::Zero(du + dw, du);
    i.topRows(du) = Matrix::Identity(du, du);
    Matrix j = Matrix::Zero(dw, du + dw);
    j.rightCols(dw) = Matrix::Identity(dw, dw);
    return ExactSequence{{u, sum, i}, {sum, w, j}};
}

}  // namespace

void ExactSequence::validate() const {
    const auto du = static_cast<Eigen::Index>(u().dim);
    const auto dv = static_cast<Eigen::Index>(v().dim);
    const auto dw = static_cast<Eigen::Index>(w().dim);
    if (!(i.target == j.source)) throw ValidationError("sequence maps do not compose");
    if (i.matrix.rows() != dv || i.matrix.cols() != du || j.matrix.rows() != dw || j.matrix.cols() != dv)
        throw ValidationError("sequence map shapes do not match their spaces");
    if (dv != du + dw) throw ValidationError("dim V must equal dim U + dim W");
    if (du > 0 && dw > 0 && (j.matrix * i.matrix).cwiseAbs().maxCoeff() >
                                kTolerance * scale_of(i.matrix) * scale_of(j.matrix) * static_cast<double>(dv))
        throw ValidationError("sequence is not exact: j o i != 0");
    if (numeric_rank(i.matrix) != du) throw ValidationError("sequence is not exact: i is not injective");
    if (numeric_rank(j.matrix) != dw) throw ValidationError("sequence is not exact: j is not surjective");
}

Complex eval_density(const DensityValue& d, const Matrix& tuple) {
    const auto n = static_cast<Eigen::Index>(d.space.dim);
    if (tuple.rows() != n || tuple.cols() != n) throw ValidationError("tuple must be dim x dim");
    return d.value * std::pow(abs_det(tuple), d.order);
}

DensityValue product_density(const DensityValue& d1, const DensityValue& d2) {
    if (!(d1.space == d2.space)) throw ValidationError("product of densities on different spaces");
    return DensityValue{d1.space, d1.order + d2.order, d1.value * d2.value};
}

DensityValue pullback(const LinearMap& phi, const DensityValue& d) {
    if (!(phi.target == d.space)) throw ValidationError("pullback: map target is not the density's space");
    if (phi.matrix.rows() != phi.matrix.cols() || phi.source.dim != phi.target.dim)
        throw ValidationError("pullback requires a square map");
    const double det = abs_det(phi.matrix);
    if (det <= kTolerance * std::pow(scale_of(phi.matrix), static_cast<double>(phi.matrix.rows())))
        throw ValidationError("pullback along a singular map");
    return DensityValue{phi.source, d.order, d.value * std::pow(det, d.order)};
}

DensityValue seq_iso(const ExactSequence& seq, const DensityValue& du, const DensityValue& dw,
                     const SeqIsoChoice& choice) {
    require_half(du, seq.u(), "rho_U");
    require_half(dw, seq.w(), "rho_W");
    return DensityValue{seq.v(), 0.5, du.value * dw.value / std::sqrt(iso_factor(seq, choice))};
}

DensityValue seq_iso_solve_w(const ExactSequence& seq, const DensityValue& dv, const DensityValue& du,
                             const SeqIsoChoice& choice) {
    require_half(dv, seq.v(), "rho_V");
    require_half(du, seq.u(), "rho_U");
    if (du.value == Complex(0.0)) throw ValidationError("rho_U must be nonzero");
    return DensityValue{seq.w(), 0.5, dv.value * std::sqrt(iso_factor(seq, choice)) / du.value};
}

DensityValue seq_iso_solve_u(const ExactSequence& seq, const DensityValue& dv, const DensityValue& dw,
                             const SeqIsoChoice& choice) {
    require_half(dv, seq.v(), "rho_V");
    require_half(dw, seq.w(), "rho_W");
    if (dw.value == Complex(0.0)) throw ValidationError("rho_W must be nonzero");
    return DensityValue{seq.u(), 0.5, dv.value * std::sqrt(iso_factor(seq, choice)) / dw.value};
}

Rational seq_iso_squared(const ExactSequenceQ& seq, const Rational& du_sq, const Rational& dw_sq,
                         const SeqIsoChoiceQ& choice) {
    const std::size_t dv = seq.i.rows();
    const std::size_t du = seq.i.cols();
    const std::size_t dw = seq.j.rows();
    if (seq.j.cols() != dv || dv != du + dw) throw ValidationError("exact sequence shapes do not match");
    if (du > 0 && dw > 0) {
        const RationalMatrix ji = seq.j * seq.i;
        for (const auto& x : ji.data())
            if (!x.is_zero()) throw ValidationError("sequence is not exact: j o i != 0");
    }
    if (seq.i.rank() != du || seq.j.rank() != dw) throw ValidationError("sequence is not exact");

    const RationalMatrix p = choice.u_basis.rows() ? choice.u_basis : RationalMatrix::identity(du);
    const RationalMatrix q = choice.w_basis.rows() ? choice.w_basis : RationalMatrix::identity(dw);
    RationalMatrix complement = choice.complement;
    if (dw > 0 && complement.rows() == 0) {
        // Greedy standard basis vectors completing im i to a basis of V.
        RationalMatrix basis = seq.i;
        complement = RationalMatrix(dv, 0);
        for (std::size_t e = 0; e < dv && complement.cols() < dw; ++e) {
            RationalMatrix unit(dv, 1);
            unit(e, 0) = 1;
            RationalMatrix grown = RationalMatrix::hcat(basis, unit);
            if (grown.rank() == grown.cols()) {
                basis = std::move(grown);
                complement = RationalMatrix::hcat(complement, unit);
            }
        }
    }
    RationalMatrix lifted(dv, dw);
    if (dw > 0) {
        if (complement.rows() != dv || complement.cols() != dw)
            throw ValidationError("complement has the wrong shape");
        const RationalMatrix jc = seq.j * complement;
        if (jc.rank() != dw) throw ValidationError("chosen subspace is not a complement of ker j");
        lifted = complement * (jc.inverse() * q);
    }
    const RationalMatrix b = RationalMatrix::hcat(seq.i * p, lifted);
    const Rational det_b = b.determinant().abs();
    if (det_b.is_zero()) throw ValidationError("assembled basis of V is singular");
    return du_sq * dw_sq * p.determinant().abs() * q.determinant().abs() / det_b;
}

ScalingResult scaling_check(const ExactSequence& seq, const ExactSequence& seq_prime, const Matrix& k) {
    seq.validate();
    seq_prime.validate();
    if (!(seq.u() == seq_prime.u()) || !(seq.v() == seq_prime.v()) || !(seq.w() == seq_prime.w()))
        throw ValidationError("scaling check needs sequences with the same ends");
    const auto dv = static_cast<Eigen::Index>(seq.v().dim);
    if (k.rows() != dv || k.cols() != dv) throw ValidationError("k must be an endomorphism of V");
    const double scale = scale_of(k) * std::max(scale_of(seq.i.matrix), scale_of(seq.j.matrix)) * static_cast<double>(dv + 1);
    if (seq.u().dim > 0 && (k * seq.i.matrix - seq_prime.i.matrix).cwiseAbs().maxCoeff() > kTolerance * scale)
        throw ValidationError("diagram does not commute: k o i != i'");
    if (seq.w().dim > 0 && (seq_prime.j.matrix * k - seq.j.matrix).cwiseAbs().maxCoeff() > kTolerance * scale)
        throw ValidationError("diagram does not commute: j' o k != j");

    const DensityValue probe_u{seq.u(), 0.5, 1.0};
    const DensityValue probe_w{seq.w(), 0.5, 1.0};
    ScalingResult out;
    out.theta = seq_iso(seq, probe_u, probe_w).value;
    out.theta_prime = seq_iso(seq_prime, probe_u, probe_w).value;
    out.ratio = std::abs(out.theta / out.theta_prime);
    out.expected = std::sqrt(abs_det(k));
    return out;
}

ExactSequence direct_sum(const ExactSequence& a, const ExactSequence& b) {
    auto block = [](const Matrix& x, const Matrix& y) {
        Matrix m = Matrix::Zero(x.rows() + y.rows(), x.cols() + y.cols());
        m.topLeftCorner(x.rows(), x.cols()) = x;
        m.bottomRightCorner(y.rows(), y.cols()) = y;
        return m;
    };
    auto sum = [](const SpaceRef& x, const SpaceRef& y) { return SpaceRef{x.dim + y.dim, x.id + "+" + y.id}; };
    const SpaceRef u = sum(a.u(), b.u()), v = sum(a.v(), b.v()), w = sum(a.w(), b.w());
    return ExactSequence{{u, v, block(a.i.matrix, b.i.matrix)}, {v, w, block(a.j.matrix, b.j.matrix)}};
}

DirectSumResult direct_sum_check(const ExactSequence& seq, const ExactSequence& seq_prime, std::mt19937_64& rng,
                                 int probes) {
    seq.validate();
    seq_prime.validate();
    std::uniform_real_distribution<double> unit(0.5, 2.0);
    std::uniform_real_distribution<double> angle(-3.14159, 3.14159);
    auto random_value = [&] { return std::polar(unit(rng), angle(rng)); };

    const ExactSequence both = direct_sum(seq, seq_prime);
    const auto dv = static_cast<Eigen::Index>(both.v().dim);
    const auto du = static_cast<Eigen::Index>(both.u().dim);
    const auto dw = static_cast<Eigen::Index>(both.w().dim);

    // theta'' gets random choices so the comparison is not block-structured.
    SeqIsoChoice choice;
    choice.u_basis = random_matrix(rng, du, du, 1.5);
    choice.w_basis = random_matrix(rng, dw, dw, 1.5);
    if (dw > 0) choice.complement = random_matrix(rng, dv, dw);

    const ExactSequence zeta = split_sequence(seq.v(), seq_prime.v(), both.v());
    const ExactSequence xi = split_sequence(seq.u(), seq_prime.u(), both.u());
    const ExactSequence eta = split_sequence(seq.w(), seq_prime.w(), both.w());

    DirectSumResult out{true, 0.0};
    for (int t = 0; t < probes; ++t) {
        const DensityValue rho{seq.u(), 0.5, random_value()};
        const DensityValue nu{seq.w(), 0.5, random_value()};
        const DensityValue rho_p{seq_prime.u(), 0.5, random_value()};
        const DensityValue nu_p{seq_prime.w(), 0.5, random_value()};

        const DensityValue lhs = seq_iso(zeta, seq_iso(seq, rho, nu), seq_iso(seq_prime, rho_p, nu_p));
        const DensityValue rhs = seq_iso(both, seq_iso(xi, rho, rho_p), seq_iso(eta, nu, nu_p), choice);
        const double dev = std::abs(lhs.value - rhs.value) / std::max(1.0, std::abs(lhs.value));
        out.max_deviation = std::max(out.max_deviation, dev);
    }
    out.pass = out.max_deviation <= kTolerance;
    return out;
}

double pfaffian(Matrix a) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n) throw ValidationError("pfaffian of non-square matrix");
    if (n % 2 != 0) return 0.0;
    double pf = 1.0;
    for (Eigen::Index k = 0; k + 1 < n; k += 2) {
        Eigen::Index pivot;
        a.row(k).tail(n - k - 1).cwiseAbs().maxCoeff(&pivot);
        pivot += k + 1;
        if (pivot != k + 1) {
            a.row(k + 1).swap(a.row(pivot));
            a.col(k + 1).swap(a.col(pivot));
            pf = -pf;
        }
        const double head = a(k, k + 1);
        if (head == 0.0) return 0.0;
        pf *= head;
        if (k + 2 < n) {
            const Eigen::VectorXd tau = a.row(k).tail(n - k - 2).transpose() / head;
            const Eigen::VectorXd col = a.col(k + 1).tail(n - k - 2);
            a.bottomRightCorner(n - k - 2, n - k - 2) += tau * col.transpose() - col * tau.transpose();
        }
    }
    return pf;
}

Matrix intersection_basis(const Matrix& l1, const Matrix& l2) {
    Matrix stacked(l1.rows(), l1.cols() + l2.cols());
    stacked << l1, -l2;
    const Matrix kernel = null_space(stacked);
    if (kernel.cols() == 0) return Matrix(l1.rows(), 0);
    return column_space(l1 * kernel.topRows(l1.cols()));
}

DensityMapResult bks_density_phi(const Matrix& omega, const Matrix& l1, Complex a, const Matrix& l2, Complex b) {
    check_lagrangian_pair(omega, l1, l2);
    const Eigen::Index half = l1.cols();
    const Matrix k = intersection_basis(l1, l2);
    const Eigen::Index d = k.cols();

    const SpaceRef s_l1{static_cast<std::size_t>(half), "L1"};
    const SpaceRef s_l2{static_cast<std::size_t>(half), "L2"};
    const SpaceRef s_ext{static_cast<std::size_t>(2 * half), "L1(+)L2"};
    const SpaceRef s_int{static_cast<std::size_t>(d), "L1nL2"};

    // |L1|^{1/2} (x) |L2|^{1/2} -> |L1 (+) L2|^{1/2}.
    const DensityValue rho_ext =
        seq_iso(split_sequence(s_l1, s_l2, s_ext), DensityValue{s_l1, 0.5, a}, DensityValue{s_l2, 0.5, b});

    // 0 -> L1nL2 --(v,v)--> L1 (+) L2 --(v1 - v2)--> L1 + L2 -> 0.
    Matrix both(l1.rows(), 2 * half);
    both << l1, l2;
    const Matrix sum_basis = column_space(both);
    const SpaceRef s_sum{static_cast<std::size_t>(sum_basis.cols()), "L1+L2"};
    Matrix gamma(2 * half, d);
    gamma << coordinates(l1, k), coordinates(l2, k);
    Matrix diff(l1.rows(), 2 * half);
    diff << l1, -l2;
    const Matrix delta = coordinates(sum_basis, diff);
    const ExactSequence first{{s_int, s_ext, gamma}, {s_ext, s_sum, delta}};
    const DensityValue rho_int{s_int, 0.5, 1.0};
    const DensityValue rho_sum = seq_iso_solve_w(first, rho_ext, rho_int);

    // 0 -> L1nL2 -> L1 + L2 -> (L1 + L2)/(L1nL2) -> 0, with the quotient
    // modelled on the orthogonal complement of L1nL2 inside L1 + L2.
    const Matrix alpha = coordinates(sum_basis, k);
    const Matrix z = orthogonal_complement(alpha, sum_basis.cols());
    const SpaceRef s_quot{static_cast<std::size_t>(z.cols()), "(L1+L2)/(L1nL2)"};
    const ExactSequence second{{s_int, s_sum, alpha}, {s_sum, s_quot, z.transpose()}};
    const Matrix lifts = sum_basis * z;
    const double pf = pfaffian(lifts.transpose() * omega * lifts);
    if (std::abs(pf) <= kTolerance) throw ValidationError("induced form on the quotient is degenerate");
    const DensityValue rho_quot{s_quot, 0.5, std::sqrt(std::abs(pf))};
    const DensityValue rho_int2 = seq_iso_solve_u(second, rho_sum, rho_quot);

    // Multiplication iso; rho_quot maps to 1 under the symplectic trivialization.
    const DensityValue out = product_density(rho_int, rho_int2);
    return DensityMapResult{k, out.value, std::abs(pf)};
}

DensityMapResult bks_density_phi_split(const Matrix& omega, const Matrix& l1, Complex a, const Matrix& l2, Complex b,
                                       const Matrix& v1, const Matrix& v2) {
    check_lagrangian_pair(omega, l1, l2);
    const Eigen::Index half = l1.cols();
    const Matrix k = intersection_basis(l1, l2);
    const Eigen::Index d = k.cols();
    const Eigen::Index c = half - d;
    if (v1.rows() != l1.rows() || v2.rows() != l1.rows() || v1.cols() != c || v2.cols() != c)
        throw ValidationError("complements must have dimension dim L - dim(L1 n L2)");

    const SpaceRef s_int{static_cast<std::size_t>(d), "L1nL2"};
    const DensityValue rho_int{s_int, 0.5, 1.0};

    // 0 -> L1nL2 -> Li -> Vi -> 0 split by Li = (L1nL2) (+) Vi.
    auto complement_density = [&](const Matrix& l, const Matrix& v, Complex value, const char* name) {
        const SpaceRef s_l{static_cast<std::size_t>(half), std::string("L") + name};
        const SpaceRef s_v{static_cast<std::size_t>(c), std::string("V") + name};
        Matrix kv(l.rows(), half);
        kv << k, v;
        Matrix adapted;
        try {
            adapted = coordinates(l, kv);
        } catch (const ValidationError&) {
            throw ValidationError(std::string("V") + name + " is not contained in L" + name);
        }
        if (numeric_rank(adapted) != half)
            throw ValidationError(std::string("V") + name + " is not a complement of L1 n L2");
        const Matrix projection = adapted.partialPivLu().inverse().bottomRows(c);
        const ExactSequence seq{{s_int, s_l, adapted.leftCols(d)}, {s_l, s_v, projection}};
        return seq_iso_solve_w(seq, DensityValue{s_l, 0.5, value}, rho_int);
    };
    const DensityValue rho_v1 = complement_density(l1, v1, a, "1");
    const DensityValue rho_v2 = complement_density(l2, v2, b, "2");

    Matrix v12(l1.rows(), 2 * c);
    v12 << v1, v2;
    if (numeric_rank(v12) != 2 * c) throw ValidationError("V1 n V2 must be {0}");

    // |I (+) I|^{1/2} carries rho_int rho_int; |V1 (+) V2|^{1/2} carries rho_v1 rho_v2.
    const SpaceRef s_v12{static_cast<std::size_t>(2 * c), "V1(+)V2"};
    const SpaceRef s_ii{static_cast<std::size_t>(2 * d), "I(+)I"};
    const DensityValue rho_ii = seq_iso(split_sequence(s_int, s_int, s_ii), rho_int, rho_int);
    const DensityValue rho_split = seq_iso(split_sequence(rho_v1.space, rho_v2.space, s_v12), rho_v1, rho_v2);

    // (v1, v2) -> [v1 - v2] identifies V1 (+) V2 with the quotient; compare with the
    // symplectic half-density pulled back along that isomorphism.
    Matrix images(l1.rows(), 2 * c);
    images << v1, -v2;
    const double pf = pfaffian(images.transpose() * omega * images);
    if (std::abs(pf) <= kTolerance) throw ValidationError("induced form on the quotient is degenerate");
    const Complex ratio = rho_split.value / std::sqrt(std::abs(pf));

    // |I (+) I|^{1/2} -> |I|^{1/2} (x) |I|^{1/2} -> |I|.
    const DensityValue first = seq_iso_solve_w(split_sequence(s_int, s_int, s_ii), rho_ii, rho_int);
    const DensityValue out = product_density(rho_int, first);
    return DensityMapResult{k, out.value * ratio, std::abs(pf)};
}

Complex reevaluate(const DensityMapResult& r, const Matrix& basis) {
    if (basis.cols() != r.intersection_basis.cols()) throw ValidationError("basis has the wrong size");
    return r.value * abs_det(coordinates(r.intersection_basis, basis));
}

Matrix random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols, double shift) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Matrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = dist(rng) + (r == c ? shift : 0.0);
    return m;
}

ExactSequence random_exact_sequence(std::mt19937_64& rng, int dim_u, int dim_w, const std::string& tag) {
    const int dim_v = dim_u + dim_w;
    const Matrix basis = random_matrix(rng, dim_v, dim_v, 2.0);
    const Matrix inv = basis.inverse();
    const SpaceRef u{static_cast<std::size_t>(dim_u), "U" + tag};
    const SpaceRef v{static_cast<std::size_t>(dim_v), "V" + tag};
    const SpaceRef w{static_cast<std::size_t>(dim_w), "W" + tag};
    const Matrix i = basis.leftCols(dim_u) * random_matrix(rng, dim_u, dim_u, 2.0);
    const Matrix j = random_matrix(rng, dim_w, dim_w, 2.0) * inv.bottomRows(dim_w);
    return ExactSequence{{u, v, i}, {v, w, j}};
}

CleanLagrangianPair random_clean_pair(std::mt19937_64& rng, int half_dim, int intersection_dim) {
    const Eigen::Index n = half_dim, d = intersection_dim, c = half_dim - intersection_dim;
    if (n < 1 || d < 0 || d > n) throw ValidationError("need 0 <= intersection_dim <= half_dim, half_dim >= 1");
    const Matrix omega0 = standard_symplectic(n);

    // Symmetric perturbations keep both extensions Lagrangian; T is kept small so
    // that I - T S stays invertible and the intersection stays span(e_1..e_d).
    Matrix s = random_matrix(rng, c, c);
    s = (s + s.transpose()).eval() / 2.0;
    Matrix t = random_matrix(rng, c, c) * 0.3;
    t = (t + t.transpose()).eval() / 2.0;
    while (c > 0 && std::abs((Matrix::Identity(c, c) - t * s).determinant()) < 0.1) t *= 0.5;

    Matrix shared = Matrix::Zero(2 * n, d);
    shared.topRows(d) = Matrix::Identity(d, d);
    Matrix ext1 = Matrix::Zero(2 * n, c);
    ext1.block(d, 0, c, c) = Matrix::Identity(c, c);
    ext1.block(n + d, 0, c, c) = s;
    Matrix ext2 = Matrix::Zero(2 * n, c);
    ext2.block(n + d, 0, c, c) = Matrix::Identity(c, c);
    ext2.block(d, 0, c, c) = t;

    const Matrix p = random_matrix(rng, 2 * n, 2 * n, 2.5);
    const Matrix p_inv = p.inverse();

    CleanLagrangianPair out;
    out.omega = p_inv.transpose() * omega0 * p_inv;
    Matrix l1(2 * n, n), l2(2 * n, n);
    l1 << shared, ext1;
    l2 << shared, ext2;
    out.l1 = p * l1 * random_matrix(rng, n, n, 2.0);
    out.l2 = p * l2 * random_matrix(rng, n, n, 2.0);
    out.v1 = p * (ext1 + shared * random_matrix(rng, d, c));
    out.v2 = p * (ext2 + shared * random_matrix(rng, d, c));
    out.planted_intersection = p * shared;
    return out;
}

}  // namespace bks::density
