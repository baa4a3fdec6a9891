#include "mdmat/registry.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mdmat {

namespace {

const Tensor& targ(const std::vector<CheckInput>& in, std::size_t i) {
    if (i >= in.size())
        throw ValidationError("check needs more inputs");
    if (const Tensor* t = std::get_if<Tensor>(&in[i]))
        return *t;
    throw ValidationError("input " + std::to_string(i + 1) + " must be a pmat matrix");
}

const LatinHypercube& qarg(const std::vector<CheckInput>& in, std::size_t i) {
    if (i >= in.size())
        throw ValidationError("check needs more inputs");
    if (const LatinHypercube* q = std::get_if<LatinHypercube>(&in[i]))
        return *q;
    throw ValidationError("input " + std::to_string(i + 1) + " must be a latin hypercube");
}

const OrthogonalArray& rarg(const std::vector<CheckInput>& in, std::size_t i) {
    if (i >= in.size())
        throw ValidationError("check needs more inputs");
    if (const OrthogonalArray* r = std::get_if<OrthogonalArray>(&in[i]))
        return *r;
    throw ValidationError("input " + std::to_string(i + 1) + " must be an orthogonal array");
}

AxisSet set_or(const CheckParams& p, std::size_t which, std::vector<int> fallback) {
    if (p.sets.size() > which)
        return p.sets[which];
    return AxisSet(std::move(fallback));
}

CheckOutcome verdict(bool holds, std::string detail = "") {
    return CheckOutcome{holds, std::move(detail)};
}

CheckOutcome all_equal(std::initializer_list<const Tensor*> ts, const char* what) {
    auto it = ts.begin();
    const Tensor* first = *it++;
    for (; it != ts.end(); ++it)
        if (!(**it == *first))
            return verdict(false, std::string(what) + ": sides differ");
    return verdict(true);
}

std::set<int> degrees_or_throw(const Tensor& a, const char* which) {
    StochasticityReport rep = stochasticity_report(a);
    if (rep.degrees.empty())
        throw ValidationError(std::string(which) + " is not k-stochastic for any k");
    return rep.degrees;
}

// Positions of `t` renumbered after the axes of `s` have been removed.
AxisSet shifted_after(const AxisSet& t, const AxisSet& s) {
    std::vector<int> out;
    for (int p : t.positions) {
        int less = 0;
        for (int q : s.positions)
            if (q < p)
                ++less;
        out.push_back(p - less);
    }
    return AxisSet(std::move(out));
}

const Rational kScalarA(5, 3);
const Rational kScalarB = Rational(-2);

std::string rs(const Rational& r) { return r.str(); }

} // namespace

Tensor kron_upper_witness() {
    Tensor a = Tensor::zeros(Shape::cube(3, 3));
    a.at({1, 1, 1}) = 1;
    a.at({1, 2, 3}) = 1;
    a.at({2, 2, 2}) = 1;
    a.at({2, 3, 1}) = 1;
    a.at({3, 1, 2}) = 1;
    a.at({3, 3, 3}) = 1;
    return a;
}

Tensor kron_zero_witness_a() {
    return Tensor(Shape::cube(3, 2), std::vector<Rational>(8, Rational(1)));
}

Tensor kron_zero_witness_b() {
    Tensor b = Tensor::zeros(Shape::cube(3, 2));
    Index idx = first_index(b.shape());
    do {
        int sum = idx[0] + idx[1] + idx[2];
        if (sum % 2 == 0)
            b.at(idx) = 1;
    } while (next_index(b.shape(), idx));
    return b;
}

Tensor hyperplane_indicator(int d, int n) {
    Tensor a = Tensor::zeros(Shape::cube(d, n));
    Index idx = first_index(a.shape());
    do {
        if (idx[0] == 1)
            a.at(idx) = 1;
    } while (next_index(a.shape(), idx));
    return a;
}

Tensor shifted_diagonal(int d, int n) {
    Tensor a = Tensor::zeros(Shape::cube(d, n));
    for (int i = 1; i <= n; ++i) {
        Index idx(static_cast<std::size_t>(d), i % n + 1);
        idx[0] = i;
        a.at(idx) = 1;
    }
    return a;
}

Tensor column_ones(int n) {
    Tensor a = Tensor::zeros(Shape::cube(2, n));
    for (int i = 1; i <= n; ++i)
        a.at({i, 1}) = 1;
    return a;
}

Tensor row_ones(int n) {
    Tensor a = Tensor::zeros(Shape::cube(2, n));
    for (int j = 1; j <= n; ++j)
        a.at({1, j}) = 1;
    return a;
}

Tensor unit_at(int n, int i, int j) {
    Tensor a = Tensor::zeros(Shape::cube(2, n));
    a.at({i, j}) = 1;
    return a;
}

namespace {

using Inputs = std::vector<CheckInput>;

std::vector<CheckDef> build_registry() {
    std::vector<CheckDef> defs;
    auto add = [&](const char* name, const char* summary, const char* usage, int lo, int hi,
                   std::function<CheckOutcome(const Inputs&, const CheckParams&)> run) {
        defs.push_back(CheckDef{name, summary, usage, lo, hi, std::move(run)});
    };

    // ----- outer product ------------------------------------------------
    add("outer-assoc", "(A x B) x C = A x (B x C)", "outer-assoc A B C", 3, 3,
        [](const Inputs& in, const CheckParams&) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1), &c = targ(in, 2);
            Tensor l = outer(outer(a, b), c), r = outer(a, outer(b, c));
            return all_equal({&l, &r}, "outer-assoc");
        });
    add("outer-commute", "A x B equals B x A after the block-rotation transpose",
        "outer-commute A B", 2, 2, [](const Inputs& in, const CheckParams&) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1);
            int d1 = a.dim(), d2 = b.dim();
            std::vector<int> perm;
            for (int k = d2 + 1; k <= d1 + d2; ++k)
                perm.push_back(k);
            for (int k = 1; k <= d2; ++k)
                perm.push_back(k);
            Tensor l = transpose(outer(b, a), perm), r = outer(a, b);
            std::ostringstream os;
            os << "witness axis permutation:";
            for (int p : perm)
                os << ' ' << p;
            return l == r ? verdict(true, os.str()) : verdict(false, "transposed B x A differs");
        });
    add("outer-add", "(A + B) x C = A x C + B x C", "outer-add A B C", 3, 3,
        [](const Inputs& in, const CheckParams&) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1), &c = targ(in, 2);
            Tensor l = outer(a + b, c), r = outer(a, c) + outer(b, c);
            return all_equal({&l, &r}, "outer-add");
        });
    add("outer-scalar", "(cA) x B = c(A x B) = A x (cB)", "outer-scalar A B", 2, 2,
        [](const Inputs& in, const CheckParams&) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1);
            for (const Rational& c : {kScalarA, kScalarB}) {
                Tensor m = scale(c, outer(a, b));
                if (outer(scale(c, a), b) != m || outer(a, scale(c, b)) != m)
                    return verdict(false, "scalar " + rs(c) + " fails");
            }
            return verdict(true);
        });

    // ----- kronecker product ---------------------------------------------
    add("kron-assoc", "(A (x) B) (x) C = A (x) (B (x) C)", "kron-assoc A B C", 3, 3,
        [](const Inputs& in, const CheckParams&) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1), &c = targ(in, 2);
            Tensor l = kronecker(kronecker(a, b), c), r = kronecker(a, kronecker(b, c));
            return all_equal({&l, &r}, "kron-assoc");
        });
    add("kron-commute", "A (x) B equals B (x) A after one hyperplane relabeling on every axis",
        "kron-commute A B", 2, 2, [](const Inputs& in, const CheckParams&) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1);
            int n1 = a.order(), n2 = b.order();
            // entry (alpha-1)*n2 + beta of A (x) B sits at (beta-1)*n1 + alpha in B (x) A
            std::vector<int> pi(static_cast<std::size_t>(n1 * n2));
            for (int alpha = 1; alpha <= n1; ++alpha)
                for (int beta = 1; beta <= n2; ++beta)
                    pi[static_cast<std::size_t>((alpha - 1) * n2 + beta - 1)] =
                        (beta - 1) * n1 + alpha;
            Tensor ba = kronecker(b, a);
            for (int axis = 1; axis <= ba.dim(); ++axis)
                ba = permute_hyperplanes(ba, axis, pi);
            return ba == kronecker(a, b)
                       ? verdict(true, "witness relabeling applied to every axis")
                       : verdict(false, "relabeled B (x) A differs");
        });
    add("kron-add", "(A + B) (x) C = A (x) C + B (x) C", "kron-add A B C", 3, 3,
        [](const Inputs& in, const CheckParams&) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1), &c = targ(in, 2);
            Tensor l = kronecker(a + b, c), r = kronecker(a, c) + kronecker(b, c);
            return all_equal({&l, &r}, "kron-add");
        });
    add("kron-scalar", "(cA) (x) B = c(A (x) B) = A (x) (cB)", "kron-scalar A B", 2, 2,
        [](const Inputs& in, const CheckParams&) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1);
            for (const Rational& c : {kScalarA, kScalarB}) {
                Tensor m = scale(c, kronecker(a, b));
                if (kronecker(scale(c, a), b) != m || kronecker(a, scale(c, b)) != m)
                    return verdict(false, "scalar " + rs(c) + " fails");
            }
            return verdict(true);
        });

    // ----- contraction and projection ------------------------------------
    add("contract-commute", "A_{S;T} = A_{T;S} and both equal the simultaneous contraction",
        "contract-commute A --sets S;T", 1, 1, [](const Inputs& in, const CheckParams& p) {
            const Tensor& a = targ(in, 0);
            AxisSet s = set_or(p, 0, {1}), t = set_or(p, 1, {2});
            Tensor both = contract(a, {s, t});
            Tensor st = contract(contract(a, s), shifted_after(t, s));
            Tensor ts = contract(contract(a, t), shifted_after(s, t));
            return all_equal({&both, &st, &ts}, "contract-commute");
        });
    add("contract-add", "(A + B)_S = A_S + B_S", "contract-add A B --sets S", 2, 2,
        [](const Inputs& in, const CheckParams& p) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1);
            AxisSet s = set_or(p, 0, {1});
            Tensor l = contract(a + b, s), r = contract(a, s) + contract(b, s);
            return all_equal({&l, &r}, "contract-add");
        });
    add("contract-scalar", "(cA)_S = c A_S", "contract-scalar A --sets S", 1, 1,
        [](const Inputs& in, const CheckParams& p) {
            const Tensor& a = targ(in, 0);
            AxisSet s = set_or(p, 0, {1});
            for (const Rational& c : {kScalarA, kScalarB})
                if (contract(scale(c, a), s) != scale(c, contract(a, s)))
                    return verdict(false, "scalar " + rs(c) + " fails");
            return verdict(true);
        });
    add("project-commute", "P_{S;T}(A) = P_{T;S}(A) and both equal the simultaneous projection",
        "project-commute A --sets S;T", 1, 1, [](const Inputs& in, const CheckParams& p) {
            const Tensor& a = targ(in, 0);
            AxisSet s = set_or(p, 0, {1}), t = set_or(p, 1, {2});
            Tensor both = project(a, {s, t});
            Tensor st = project(project(a, s), shifted_after(t, s));
            Tensor ts = project(project(a, t), shifted_after(s, t));
            return all_equal({&both, &st, &ts}, "project-commute");
        });
    add("project-add", "P_S(A + B) = P_S(A) + P_S(B)", "project-add A B --sets S", 2, 2,
        [](const Inputs& in, const CheckParams& p) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1);
            AxisSet s = set_or(p, 0, {1});
            Tensor l = project(a + b, s), r = project(a, s) + project(b, s);
            return all_equal({&l, &r}, "project-add");
        });
    add("project-scalar", "P_S(cA) = c P_S(A)", "project-scalar A --sets S", 1, 1,
        [](const Inputs& in, const CheckParams& p) {
            const Tensor& a = targ(in, 0);
            AxisSet s = set_or(p, 0, {1});
            for (const Rational& c : {kScalarA, kScalarB})
                if (project(scale(c, a), s) != scale(c, project(a, s)))
                    return verdict(false, "scalar " + rs(c) + " fails");
            return verdict(true);
        });
    add("single-axis-same", "one-axis contraction and projection agree",
        "single-axis-same A [--ell axis]", 1, 1, [](const Inputs& in, const CheckParams& p) {
            const Tensor& a = targ(in, 0);
            int axis = p.ell.value_or(1);
            AxisSet s({axis});
            Tensor l = contract(a, s), r = project(a, s);
            return all_equal({&l, &r}, "single-axis-same");
        });
    add("unfold-contract", "(J^l x A) contracted over the first l axes gives back A",
        "unfold-contract A [--ell l]", 1, 1, [](const Inputs& in, const CheckParams& p) {
            const Tensor& a = targ(in, 0);
            int ell = p.ell.value_or(2);
            if (ell < 1)
                throw ValidationError("ell must be >= 1");
            std::vector<int> s;
            for (int k = 1; k <= ell; ++k)
                s.push_back(k);
            Tensor l = contract(outer(uniform_J(ell, a.order()), a), AxisSet(s));
            return all_equal({&l, &a}, "unfold-contract");
        });
    add("unfold-project", "P over the first l axes of (J^l x A) gives n^{l-1} A",
        "unfold-project A [--ell l]", 1, 1, [](const Inputs& in, const CheckParams& p) {
            const Tensor& a = targ(in, 0);
            int ell = p.ell.value_or(2);
            if (ell < 1)
                throw ValidationError("ell must be >= 1");
            std::vector<int> s;
            for (int k = 1; k <= ell; ++k)
                s.push_back(k);
            Tensor l = project(outer(uniform_J(ell, a.order()), a), AxisSet(s));
            Tensor r = scale(pow(Rational(a.order()), ell - 1), a);
            return all_equal({&l, &r}, "unfold-project");
        });

    // ----- dot product ----------------------------------------------------
    add("dot-assoc", "(AB)C = A(BC)", "dot-assoc A B C", 3, 3,
        [](const Inputs& in, const CheckParams&) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1), &c = targ(in, 2);
            Tensor l = dot(dot(a, b), c), r = dot(a, dot(b, c));
            return all_equal({&l, &r}, "dot-assoc");
        });
    add("dot-add", "(A + B)C = AC + BC and A(B + C) = AB + AC", "dot-add A B C", 3, 3,
        [](const Inputs& in, const CheckParams&) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1), &c = targ(in, 2);
            Tensor l1 = dot(a + b, c), r1 = dot(a, c) + dot(b, c);
            if (l1 != r1)
                return verdict(false, "left distributivity fails");
            Tensor l2 = dot(a, b + c), r2 = dot(a, b) + dot(a, c);
            if (l2 != r2)
                return verdict(false, "right distributivity fails");
            return verdict(true);
        });
    add("dot-scalar", "(cA)B = c(AB) = A(cB)", "dot-scalar A B", 2, 2,
        [](const Inputs& in, const CheckParams&) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1);
            for (const Rational& c : {kScalarA, kScalarB}) {
                Tensor m = scale(c, dot(a, b));
                if (dot(scale(c, a), b) != m || dot(a, scale(c, b)) != m)
                    return verdict(false, "scalar " + rs(c) + " fails");
            }
            return verdict(true);
        });
    add("dot-identity", "AI = IA = A for the 2-dimensional identity", "dot-identity A", 1, 1,
        [](const Inputs& in, const CheckParams&) {
            const Tensor& a = targ(in, 0);
            Tensor i = identity_diag(2, a.order());
            Tensor l = dot(a, i), r = dot(i, a);
            return all_equal({&l, &r, &a}, "dot-identity");
        });
    add("dot-noncommute", "the given pair witnesses AB != BA", "dot-noncommute A B", 2, 2,
        [](const Inputs& in, const CheckParams&) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1);
            Tensor ab = dot(a, b), ba = dot(b, a);
            return ab != ba ? verdict(true) : verdict(false, "AB = BA for this pair");
        });
    add("sdot-pair", "the two-factor S-dot product is the (i,j)-dot product",
        "sdot-pair A B [--i I --j J]", 2, 2, [](const Inputs& in, const CheckParams& p) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1);
            int i = p.i.value_or(a.dim()), j = p.j.value_or(1);
            Tensor l = s_dot({{a, i}, {b, j}});
            Tensor r = dot_ij(a, i, b, j);
            return all_equal({&l, &r}, "sdot-pair");
        });
    add("sdot-chain", "repeated dot products match contractions of the triple outer product",
        "sdot-chain A B C", 3, 3, [](const Inputs& in, const CheckParams&) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1), &c = targ(in, 2);
            int d1 = a.dim(), d2 = b.dim();
            if (d2 < 2)
                throw ValidationError("sdot-chain needs the middle factor to have dimension >= 2");
            Tensor x = outer(outer(a, b), c);
            Tensor via = contract(x, {AxisSet({d1, d1 + 1}), AxisSet({d1 + d2, d1 + d2 + 1})});
            Tensor l = dot(dot(a, b), c), r = dot(a, dot(b, c));
            return all_equal({&via, &l, &r}, "sdot-chain");
        });

    // ----- circle product ---------------------------------------------------
    add("circle-assoc", "(A o B) o C = A o (B o C)", "circle-assoc A B C", 3, 3,
        [](const Inputs& in, const CheckParams&) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1), &c = targ(in, 2);
            Tensor l = circle(circle(a, b), c), r = circle(a, circle(b, c));
            return all_equal({&l, &r}, "circle-assoc");
        });
    add("circle-add-left", "(A + B) o C = A o C + B o C", "circle-add-left A B C", 3, 3,
        [](const Inputs& in, const CheckParams&) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1), &c = targ(in, 2);
            Tensor l = circle(a + b, c), r = circle(a, c) + circle(b, c);
            return all_equal({&l, &r}, "circle-add-left");
        });
    add("circle-add-right", "A o (B + C) = A o B + A o C for 2-dimensional A",
        "circle-add-right A B C", 3, 3, [](const Inputs& in, const CheckParams&) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1), &c = targ(in, 2);
            if (a.dim() != 2)
                throw ValidationError("circle-add-right needs a 2-dimensional first factor");
            Tensor l = circle(a, b + c), r = circle(a, b) + circle(a, c);
            return all_equal({&l, &r}, "circle-add-right");
        });
    add("circle-scalar", "(cA) o B = c(A o B) and A o (cB) = c^{d1-1}(A o B)",
        "circle-scalar A B", 2, 2, [](const Inputs& in, const CheckParams&) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1);
            for (const Rational& c : {kScalarA, kScalarB}) {
                Tensor base = circle(a, b);
                if (circle(scale(c, a), b) != scale(c, base))
                    return verdict(false, "left scalar " + rs(c) + " fails");
                if (circle(a, scale(c, b)) != scale(pow(c, a.dim() - 1), base))
                    return verdict(false, "right scalar " + rs(c) + " fails");
            }
            return verdict(true);
        });

    // ----- mixed relations --------------------------------------------------
    add("mixed-outer-kron", "(A x B) (x) (C x D) = (A (x) C) x (B (x) D)",
        "mixed-outer-kron A B C D", 4, 4, [](const Inputs& in, const CheckParams&) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1), &c = targ(in, 2), &d = targ(in, 3);
            Tensor l = kronecker(outer(a, b), outer(c, d));
            Tensor r = outer(kronecker(a, c), kronecker(b, d));
            return all_equal({&l, &r}, "mixed-outer-kron");
        });
    add("mixed-contract-outer", "A_S x B = (A x B)_S", "mixed-contract-outer A B --sets S", 2, 2,
        [](const Inputs& in, const CheckParams& p) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1);
            AxisSet s = set_or(p, 0, {1});
            Tensor l = outer(contract(a, s), b), r = contract(outer(a, b), s);
            return all_equal({&l, &r}, "mixed-contract-outer");
        });
    add("mixed-project-outer", "P_S(A) x B = P_S(A x B)", "mixed-project-outer A B --sets S", 2,
        2, [](const Inputs& in, const CheckParams& p) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1);
            AxisSet s = set_or(p, 0, {1});
            Tensor l = outer(project(a, s), b), r = project(outer(a, b), s);
            return all_equal({&l, &r}, "mixed-project-outer");
        });
    add("mixed-dot-outer", "(A .ij B) x C = A .ij (B x C)",
        "mixed-dot-outer A B C [--i I --j J]", 3, 3, [](const Inputs& in, const CheckParams& p) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1), &c = targ(in, 2);
            int i = p.i.value_or(a.dim()), j = p.j.value_or(1);
            Tensor l = outer(dot_ij(a, i, b, j), c);
            Tensor r = dot_ij(a, i, outer(b, c), j);
            return all_equal({&l, &r}, "mixed-dot-outer");
        });
    add("mixed-contract-kron", "A_S (x) B_S = (A (x) B)_S", "mixed-contract-kron A B --sets S",
        2, 2, [](const Inputs& in, const CheckParams& p) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1);
            AxisSet s = set_or(p, 0, {1});
            Tensor l = kronecker(contract(a, s), contract(b, s));
            Tensor r = contract(kronecker(a, b), s);
            return all_equal({&l, &r}, "mixed-contract-kron");
        });
    add("mixed-project-kron", "P_S(A (x) B) = P_S(A) (x) P_S(B)",
        "mixed-project-kron A B --sets S", 2, 2, [](const Inputs& in, const CheckParams& p) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1);
            AxisSet s = set_or(p, 0, {1});
            Tensor l = project(kronecker(a, b), s);
            Tensor r = kronecker(project(a, s), project(b, s));
            return all_equal({&l, &r}, "mixed-project-kron");
        });
    add("mixed-dot-kron", "(A (x) B) . (C (x) D) = (A . C) (x) (B . D)",
        "mixed-dot-kron A B C D", 4, 4, [](const Inputs& in, const CheckParams&) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1), &c = targ(in, 2), &d = targ(in, 3);
            Tensor l = dot(kronecker(a, b), kronecker(c, d));
            Tensor r = kronecker(dot(a, c), dot(b, d));
            return all_equal({&l, &r}, "mixed-dot-kron");
        });
    add("mixed-project-contract", "P_T(A_S) = (P_T(A))_S for disjoint S, T",
        "mixed-project-contract A --sets S;T", 1, 1, [](const Inputs& in, const CheckParams& p) {
            const Tensor& a = targ(in, 0);
            AxisSet s = set_or(p, 0, {1}), t = set_or(p, 1, {2});
            Tensor l = project(contract(a, s), shifted_after(t, s));
            Tensor r = contract(project(a, t), shifted_after(s, t));
            return all_equal({&l, &r}, "mixed-project-contract");
        });
    add("mixed-contract-dot", "A_S . B = (A . B)_S when S avoids the last axis of A",
        "mixed-contract-dot A B --sets S", 2, 2, [](const Inputs& in, const CheckParams& p) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1);
            AxisSet s = set_or(p, 0, {1});
            for (int pnum : s.positions)
                if (pnum == a.dim())
                    throw ValidationError("S must avoid the dot axis of A");
            Tensor as = contract(a, s);
            Tensor l = dot(as, b);
            Tensor r = contract(dot(a, b), s);
            return all_equal({&l, &r}, "mixed-contract-dot");
        });
    add("mixed-project-dot", "P_S(A) . B = P_S(A . B) when S avoids the last axis of A",
        "mixed-project-dot A B --sets S", 2, 2, [](const Inputs& in, const CheckParams& p) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1);
            AxisSet s = set_or(p, 0, {1});
            for (int pnum : s.positions)
                if (pnum == a.dim())
                    throw ValidationError("S must avoid the dot axis of A");
            Tensor l = dot(project(a, s), b);
            Tensor r = project(dot(a, b), s);
            return all_equal({&l, &r}, "mixed-project-dot");
        });

    // ----- plane structure ----------------------------------------------------
    add("plane-by-contraction",
        "extracting a plane agrees with indicator outer products plus contraction",
        "plane-by-contraction A --sets F (fixing axis f at value 1 each)", 1, 1,
        [](const Inputs& in, const CheckParams& p) {
            const Tensor& a = targ(in, 0);
            AxisSet f = set_or(p, 0, {1});
            PlaneSpec spec;
            for (int axis : f.positions)
                spec.fixed[axis] = 1; // value 1 on every fixed axis
            Tensor direct = extract_plane(a, spec);
            Tensor lifted = a;
            std::vector<AxisSet> pairs;
            int extra = 0;
            for (int axis : f.positions) {
                Tensor e = Tensor::zeros(Shape({a.extent(axis)}));
                e.at({spec.fixed[axis]}) = 1;
                // Plain concatenation of axes; the factors need not share an order.
                std::vector<int> ext = lifted.shape().extents;
                ext.push_back(a.extent(axis));
                Tensor big = Tensor::zeros(Shape(ext));
                std::size_t blk = e.size();
                for (std::size_t off = 0; off < lifted.size(); ++off)
                    for (std::size_t v = 0; v < blk; ++v)
                        big.flat(off * blk + v) = lifted.flat(off) * e.flat(v);
                lifted = std::move(big);
                pairs.push_back(AxisSet({axis, a.dim() + 1 + extra}));
                ++extra;
            }
            Tensor via = contract(lifted, pairs);
            return all_equal({&direct, &via}, "plane-by-contraction");
        });

    // ----- stochasticity of products -------------------------------------------
    add("stoch-outer", "the outer product is r-stochastic after its normalization",
        "stoch-outer A B", 2, 2, [](const Inputs& in, const CheckParams&) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1);
            auto da = degrees_or_throw(a, "A"), db = degrees_or_throw(b, "B");
            Tensor prod = outer(a, b);
            std::ostringstream os;
            for (int k1 : da)
                for (int k2 : db) {
                    auto pr = predicted_product_stochasticity(ProductKind::Outer, a.dim(), k1,
                                                              a.order(), b.dim(), k2, b.order(), 0);
                    if (!pr.applicable)
                        continue;
                    if (!is_k_stochastic(scale(pr.scale, prod), pr.r))
                        return verdict(false, "fails for k1=" + std::to_string(k1) +
                                                  " k2=" + std::to_string(k2));
                    os << "(k1=" << k1 << ",k2=" << k2 << ")->r=" << pr.r
                       << " scale=" << rs(pr.scale) << "; ";
                }
            return verdict(true, os.str());
        });
    add("stoch-kron", "the Kronecker product is r-stochastic after its normalization",
        "stoch-kron A B", 2, 2, [](const Inputs& in, const CheckParams&) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1);
            auto da = degrees_or_throw(a, "A"), db = degrees_or_throw(b, "B");
            Tensor prod = kronecker(a, b);
            std::ostringstream os;
            for (int k1 : da)
                for (int k2 : db) {
                    auto pr = predicted_product_stochasticity(ProductKind::Kronecker, a.dim(), k1,
                                                              a.order(), b.dim(), k2, b.order(), 0);
                    if (!pr.applicable)
                        continue;
                    if (!is_k_stochastic(scale(pr.scale, prod), pr.r))
                        return verdict(false, "fails for k1=" + std::to_string(k1) +
                                                  " k2=" + std::to_string(k2));
                    os << "(k1=" << k1 << ",k2=" << k2 << ")->r=" << pr.r
                       << " scale=" << rs(pr.scale) << "; ";
                }
            return verdict(true, os.str());
        });
    add("stoch-contract", "(1/n) A_S keeps the stochasticity degree when k + |S| <= d",
        "stoch-contract A --sets S", 1, 1, [](const Inputs& in, const CheckParams& p) {
            const Tensor& a = targ(in, 0);
            auto da = degrees_or_throw(a, "A");
            AxisSet s = set_or(p, 0, {1, 2});
            int ell = static_cast<int>(s.positions.size());
            Tensor as = contract(a, s);
            bool any = false;
            std::ostringstream os;
            for (int k : da) {
                auto pr = predicted_product_stochasticity(ProductKind::Contraction, a.dim(), k,
                                                          a.order(), 0, 1, 1, ell);
                if (!pr.applicable)
                    continue;
                any = true;
                if (!is_k_stochastic(scale(pr.scale, as), pr.r))
                    return verdict(false, "fails for k=" + std::to_string(k));
                os << "k=" << k << " scale=" << rs(pr.scale) << "; ";
            }
            if (!any)
                throw ValidationError("no degree satisfies k + |S| <= d");
            return verdict(true, os.str());
        });
    add("stoch-project",
        "P_S(A) is (k-|S|)-stochastic for k > |S| and a uniform matrix otherwise",
        "stoch-project A --sets S", 1, 1, [](const Inputs& in, const CheckParams& p) {
            const Tensor& a = targ(in, 0);
            auto da = degrees_or_throw(a, "A");
            AxisSet s = set_or(p, 0, {1});
            int ell = static_cast<int>(s.positions.size());
            if (a.dim() - ell < 1)
                throw ValidationError("projection would remove every axis");
            Tensor ps = project(a, s);
            std::ostringstream os;
            for (int k : da) {
                if (k > ell) {
                    if (!is_k_stochastic(ps, k - ell))
                        return verdict(false, "fails for k=" + std::to_string(k));
                    os << "k=" << k << "->degree " << (k - ell) << "; ";
                } else {
                    Tensor expected = scale(pow(Rational(a.order()), ell - k + 1),
                                            uniform_J(a.dim() - ell, a.order()));
                    if (ps != expected)
                        return verdict(false, "uniform form fails for k=" + std::to_string(k));
                    os << "k=" << k << "->n^{" << (ell - k + 1) << "} J; ";
                }
            }
            return verdict(true, os.str());
        });
    add("stoch-dot", "the dot product is r-stochastic after its normalization",
        "stoch-dot A B", 2, 2, [](const Inputs& in, const CheckParams&) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1);
            auto da = degrees_or_throw(a, "A"), db = degrees_or_throw(b, "B");
            Tensor prod = dot(a, b);
            bool any = false;
            std::ostringstream os;
            for (int k1 : da)
                for (int k2 : db) {
                    auto pr = predicted_product_stochasticity(ProductKind::Dot, a.dim(), k1,
                                                              a.order(), b.dim(), k2, b.order(), 0);
                    if (!pr.applicable)
                        continue;
                    any = true;
                    if (!is_k_stochastic(scale(pr.scale, prod), pr.r))
                        return verdict(false, "fails for k1=" + std::to_string(k1) +
                                                  " k2=" + std::to_string(k2));
                    os << "(k1=" << k1 << ",k2=" << k2 << ")->r=" << pr.r
                       << " scale=" << rs(pr.scale) << "; ";
                }
            if (!any)
                throw ValidationError("no applicable degree combination for the dot normalization");
            return verdict(true, os.str());
        });
    add("stoch-circle", "the circle product of polystochastic matrices is polystochastic",
        "stoch-circle A B", 2, 2, [](const Inputs& in, const CheckParams&) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1);
            if (!stochasticity_report(a).polystochastic() ||
                !stochasticity_report(b).polystochastic())
                throw ValidationError("both factors must be polystochastic");
            return verdict(is_k_stochastic(circle(a, b), 1));
        });
    add("dot-uniform", "A J^t = J^t A = J^{d+t-2} for polystochastic A",
        "dot-uniform A [--t t]", 1, 1, [](const Inputs& in, const CheckParams& p) {
            const Tensor& a = targ(in, 0);
            if (!stochasticity_report(a).polystochastic())
                throw ValidationError("A must be polystochastic");
            int t = p.t.value_or(2);
            if (t < 1 || a.dim() + t - 2 < 1)
                throw ValidationError("t too small for this matrix");
            Tensor j = uniform_J(t, a.order());
            Tensor expected = uniform_J(a.dim() + t - 2, a.order());
            Tensor l = dot(a, j), r = dot(j, a);
            return all_equal({&l, &r, &expected}, "dot-uniform");
        });
    add("circle-uniform", "A o J^t = J^t o A counterparts equal uniform matrices",
        "circle-uniform A [--t t]", 1, 1, [](const Inputs& in, const CheckParams& p) {
            const Tensor& a = targ(in, 0);
            if (!stochasticity_report(a).polystochastic())
                throw ValidationError("A must be polystochastic");
            int t = p.t.value_or(2);
            if (t < 1)
                throw ValidationError("t must be >= 1");
            Tensor j = uniform_J(t, a.order());
            int d = a.dim();
            Tensor l = circle(a, j);
            Tensor lexp = uniform_J((d - 1) * (t - 1) + 1, a.order());
            if (l != lexp)
                return verdict(false, "A o J differs from the uniform matrix");
            Tensor r = circle(j, a);
            Tensor rexp = uniform_J((t - 1) * (d - 1) + 1, a.order());
            if (r != rexp)
                return verdict(false, "J o A differs from the uniform matrix");
            return verdict(true);
        });
    add("dot-stoch-zero-witness",
        "two 2-stochastic matrices whose dot product is 0, hence r-stochastic for no r",
        "dot-stoch-zero-witness", 0, 0, [](const Inputs&, const CheckParams&) {
            Tensor a = unit_at(2, 2, 2), b = unit_at(2, 1, 1);
            if (!is_k_stochastic(a, 2) || !is_k_stochastic(b, 2))
                return verdict(false, "witnesses are not 2-stochastic");
            Tensor ab = dot(a, b);
            if (!ab.is_zero())
                return verdict(false, "AB is not the zero matrix");
            return verdict(true, "AB = 0, so no scaling makes it r-stochastic");
        });

    // ----- eigenpairs and coverings ---------------------------------------------
    add("eigen", "A o v = lambda (I o v)", "eigen A v --lambda q", 2, 2,
        [](const Inputs& in, const CheckParams& p) {
            const Tensor &a = targ(in, 0), &v = targ(in, 1);
            if (!p.lambda)
                throw ValidationError("eigen needs --lambda");
            return verdict(verify_eigenpair(a, Eigenpair{*p.lambda, v}));
        });
    add("eigen-ones", "(d-1)-stochastic matrices have eigenvalue 1 with the all-ones vector",
        "eigen-ones A", 1, 1, [](const Inputs& in, const CheckParams&) {
            const Tensor& a = targ(in, 0);
            if (a.dim() < 2)
                throw ValidationError("eigen-ones needs a matrix of dimension >= 2");
            if (!is_k_stochastic(a, a.dim() - 1))
                throw ValidationError("A must be (d-1)-stochastic");
            Tensor e(Shape({a.order()}),
                     std::vector<Rational>(static_cast<std::size_t>(a.order()), Rational(1)));
            return verdict(verify_eigenpair(a, Eigenpair{1, e}));
        });
    add("covering", "A o P = P o B for the given row-selection matrix",
        "covering A B P", 3, 3, [](const Inputs& in, const CheckParams&) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1);
            CoveringWitness p(targ(in, 2));
            return verdict(check_covering(a, b, p));
        });
    add("covering-uniform",
        "the scaled Kronecker product with the uniform matrix covers A; reports the derived "
        "scale next to the stated one",
        "covering-uniform A [--n n2]", 1, 1, [](const Inputs& in, const CheckParams& p) {
            const Tensor& a = targ(in, 0);
            int n2 = p.n.value_or(2);
            CoveringConstruction c = covering_by_uniform(a, n2);
            Tensor unscaled = kronecker(a, uniform_J(a.dim(), n2));
            auto solved = solve_covering_scale(unscaled, a, c.witness);
            std::string report = "derived scale " + rs(c.derived_scale) + " (stated: " +
                                 rs(c.stated_scale) + ")";
            if (!solved)
                return verdict(false, "no scalar satisfies the covering identity");
            if (*solved != c.derived_scale)
                return verdict(false, "solved scale " + rs(*solved) + " != " + report);
            if (!check_covering(c.covering, a, c.witness))
                return verdict(false, "covering identity fails; " + report);
            return verdict(true, report);
        });
    add("covering-identity",
        "the scaled Kronecker product with the diagonal identity covers A; reports the derived "
        "scale next to the stated one",
        "covering-identity A [--n n2]", 1, 1, [](const Inputs& in, const CheckParams& p) {
            const Tensor& a = targ(in, 0);
            int n2 = p.n.value_or(2);
            CoveringConstruction c = covering_by_identity(a, n2);
            Tensor unscaled = kronecker(a, identity_diag(a.dim(), n2));
            auto solved = solve_covering_scale(unscaled, a, c.witness);
            std::string report = "derived scale " + rs(c.derived_scale) + " (stated: " +
                                 rs(c.stated_scale) + ")";
            if (!solved)
                return verdict(false, "no scalar satisfies the covering identity");
            if (*solved != c.derived_scale)
                return verdict(false, "solved scale " + rs(*solved) + " != " + report);
            if (!check_covering(c.covering, a, c.witness))
                return verdict(false, "covering identity fails; " + report);
            return verdict(true, report);
        });

    // ----- permanents ---------------------------------------------------------
    add("per-outer", "per(A x B) = n! per(A) per(B)", "per-outer A B", 2, 2,
        [](const Inputs& in, const CheckParams& p) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1);
            Rational l = permanent(outer(a, b), p.threads);
            Rational r = Rational(factorial(a.order())) * permanent(a) * permanent(b);
            return l == r ? verdict(true, "per = " + rs(l))
                          : verdict(false, rs(l) + " != " + rs(r));
        });
    add("per-reduced-outer",
        "the reduced outer product reaches per(A) per(B) in dimension d1+d2-1",
        "per-reduced-outer A B [--sigma perm]", 2, 2, [](const Inputs& in, const CheckParams& p) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1);
            std::vector<int> sigma = p.sigma;
            if (sigma.empty())
                for (int i = 1; i <= a.order(); ++i)
                    sigma.push_back(i);
            Rational l = permanent(reduced_outer(a, b, sigma), p.threads);
            Rational r = permanent(a) * permanent(b);
            return l == r ? verdict(true, "per = " + rs(l))
                          : verdict(false, rs(l) + " != " + rs(r));
        });
    add("per-dot-bound", "per(AB) >= per(A) per(B) for nonnegative factors",
        "per-dot-bound A B", 2, 2, [](const Inputs& in, const CheckParams& p) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1);
            if (!a.nonnegative() || !b.nonnegative())
                throw ValidationError("the bound needs nonnegative factors");
            Rational l = permanent(dot(a, b), p.threads), r = permanent(a) * permanent(b);
            return l >= r ? verdict(true, rs(l) + " >= " + rs(r))
                          : verdict(false, rs(l) + " < " + rs(r));
        });
    add("per-circle-bound", "per(A o B) >= per(A) per(B)^{d1-1} for nonnegative factors",
        "per-circle-bound A B", 2, 2, [](const Inputs& in, const CheckParams& p) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1);
            if (!a.nonnegative() || !b.nonnegative())
                throw ValidationError("the bound needs nonnegative factors");
            Rational l = permanent(circle(a, b), p.threads);
            Rational r = permanent(a) * pow(permanent(b), a.dim() - 1);
            return l >= r ? verdict(true, rs(l) + " >= " + rs(r))
                          : verdict(false, rs(l) + " < " + rs(r));
        });
    add("per-kron-bound",
        "per(A (x) B) >= per(A) per(B)^{n1} + per(A)^{n2} per(B) - per(A) per(B)",
        "per-kron-bound A B", 2, 2, [](const Inputs& in, const CheckParams& p) {
            const Tensor &a = targ(in, 0), &b = targ(in, 1);
            if (!a.nonnegative() || !b.nonnegative())
                throw ValidationError("the bound needs nonnegative factors");
            Rational pa = permanent(a), pb = permanent(b);
            Rational l = permanent(kronecker(a, b), p.threads);
            Rational r = pa * pow(pb, a.order()) + pow(pa, b.order()) * pb - pa * pb;
            return l >= r ? verdict(true, rs(l) + " >= " + rs(r))
                          : verdict(false, rs(l) + " < " + rs(r));
        });
    add("per-project-bound", "per P_S(A) >= per(A) for nonnegative A",
        "per-project-bound A --sets S", 1, 1, [](const Inputs& in, const CheckParams& p) {
            const Tensor& a = targ(in, 0);
            if (!a.nonnegative())
                throw ValidationError("the bound needs a nonnegative matrix");
            AxisSet s = set_or(p, 0, {1});
            Rational l = permanent(project(a, s), p.threads), r = permanent(a, p.threads);
            return l >= r ? verdict(true, rs(l) + " >= " + rs(r))
                          : verdict(false, rs(l) + " < " + rs(r));
        });
    add("per-oracle-agree", "backtracking permanent equals the enumeration oracle",
        "per-oracle-agree A [--budget N]", 1, 1, [](const Inputs& in, const CheckParams& p) {
            const Tensor& a = targ(in, 0);
            Rational fast = permanent(a, p.threads), slow = permanent_oracle(a, p.budget);
            return fast == slow ? verdict(true, "per = " + rs(fast))
                                : verdict(false, rs(fast) + " != " + rs(slow));
        });
    add("per-kron-upper-refuted",
        "a 3-dimensional matrix with per(A (x) A) = 40 < 64 = per(A)^{2n}",
        "per-kron-upper-refuted", 0, 0, [](const Inputs&, const CheckParams& p) {
            Tensor a = kron_upper_witness();
            Rational pa = permanent(a);
            Rational pk = permanent(kronecker(a, a), p.threads);
            Rational upper = pow(pa, 2 * a.order());
            bool ok = pa == Rational(2) && pk == Rational(40) && upper == Rational(64) &&
                      pk < upper;
            return verdict(ok, "per(A)=" + rs(pa) + " per(A(x)A)=" + rs(pk) +
                                   " per(A)^{2n}=" + rs(upper));
        });
    add("per-kron-zero-refuted",
        "per(B) = 0 while per(A (x) B) = 64 > 0",
        "per-kron-zero-refuted", 0, 0, [](const Inputs&, const CheckParams& p) {
            Tensor a = kron_zero_witness_a(), b = kron_zero_witness_b();
            Rational pa = permanent(a), pb = permanent(b);
            Rational pk = permanent(kronecker(a, b), p.threads);
            bool ok = pa == Rational(4) && pb == Rational(0) && pk == Rational(64);
            return verdict(ok, "per(A)=" + rs(pa) + " per(B)=" + rs(pb) +
                                   " per(A(x)B)=" + rs(pk));
        });
    add("per-project-zero-refuted",
        "a hyperplane indicator has per(A) = 0 while per P_1(A) = (n!)^{d-2}",
        "per-project-zero-refuted [--n n --d d]", 0, 0,
        [](const Inputs&, const CheckParams& p) {
            int n = p.n.value_or(2), d = p.d.value_or(3);
            if (n < 2 || d < 2)
                throw ValidationError("needs n >= 2 and d >= 2");
            Tensor a = hyperplane_indicator(d, n);
            Rational pa = permanent(a);
            Rational pp = permanent(project(a, AxisSet({1})));
            Rational expected = pow(Rational(factorial(n)), d - 2);
            bool ok = pa.is_zero() && pp == expected;
            return verdict(ok, "per(A)=" + rs(pa) + " per(P_1(A))=" + rs(pp) + " expected " +
                                   rs(expected));
        });
    add("per-contract-raise-refuted",
        "a hyperplane indicator has per(A) = 0 while per(A_S) = (n!)^{d-l-1} > 0",
        "per-contract-raise-refuted [--n n --d d --ell l]", 0, 0,
        [](const Inputs&, const CheckParams& p) {
            int n = p.n.value_or(2), d = p.d.value_or(4), ell = p.ell.value_or(2);
            if (n < 2 || ell < 2 || d - ell < 1)
                throw ValidationError("needs n >= 2, l >= 2, d - l >= 1");
            Tensor a = hyperplane_indicator(d, n);
            std::vector<int> s;
            for (int k = 1; k <= ell; ++k)
                s.push_back(k);
            Rational pa = permanent(a);
            Rational pc = permanent(contract(a, AxisSet(s)));
            Rational expected = pow(Rational(factorial(n)), d - ell - 1);
            bool ok = pa.is_zero() && pc == expected && !pc.is_zero();
            return verdict(ok, "per(A)=" + rs(pa) + " per(A_S)=" + rs(pc));
        });
    add("per-contract-drop-refuted",
        "a shifted diagonal has per(A) = 1 while per(A_S) = 0",
        "per-contract-drop-refuted [--n n --d d --ell l]", 0, 0,
        [](const Inputs&, const CheckParams& p) {
            int n = p.n.value_or(2), d = p.d.value_or(4), ell = p.ell.value_or(2);
            if (n < 2 || ell < 2 || d - ell < 1)
                throw ValidationError("needs n >= 2, l >= 2, d - l >= 1");
            Tensor a = shifted_diagonal(d, n);
            std::vector<int> s;
            for (int k = 1; k <= ell; ++k)
                s.push_back(k);
            Rational pa = permanent(a);
            Rational pc = permanent(contract(a, AxisSet(s)));
            bool ok = pa == Rational(1) && pc.is_zero();
            return verdict(ok, "per(A)=" + rs(pa) + " per(A_S)=" + rs(pc));
        });
    add("per-dot-upper-refuted",
        "per(A) = per(B) = 0 while AB = n J^2 with per(AB) = n!",
        "per-dot-upper-refuted [--n n]", 0, 0, [](const Inputs&, const CheckParams& p) {
            int n = p.n.value_or(3);
            if (n < 2)
                throw ValidationError("needs n >= 2");
            Tensor a = column_ones(n), b = row_ones(n);
            Rational pa = permanent(a), pb = permanent(b);
            Tensor ab = dot(a, b);
            bool form = ab == scale(Rational(n), uniform_J(2, n));
            Rational pab = permanent(ab);
            bool ok = pa.is_zero() && pb.is_zero() && form && pab == Rational(factorial(n));
            return verdict(ok, "per(A)=" + rs(pa) + " per(B)=" + rs(pb) +
                                   " per(AB)=" + rs(pab));
        });
    add("per-equivalence-invariant",
        "the permanent is invariant under transposes and hyperplane relabelings",
        "per-equivalence-invariant A [--sigma axis-perm]", 1, 1,
        [](const Inputs& in, const CheckParams& p) {
            const Tensor& a = targ(in, 0);
            std::vector<int> perm = p.sigma;
            if (perm.empty())
                for (int k = a.dim(); k >= 1; --k)
                    perm.push_back(k);
            Rational base = permanent(a, p.threads);
            if (permanent(transpose(a, perm), p.threads) != base)
                return verdict(false, "transpose changes the permanent");
            std::vector<int> rev;
            for (int v = a.order(); v >= 1; --v)
                rev.push_back(v);
            if (permanent(permute_hyperplanes(a, 1, rev), p.threads) != base)
                return verdict(false, "hyperplane relabeling changes the permanent");
            return verdict(true, "per = " + rs(base));
        });

    // ----- latin hypercubes, quasigroups and orthogonal arrays -----------------
    add("latin-roundtrip", "M(Q) is a multidimensional permutation and converts back to Q",
        "latin-roundtrip Q", 1, 1, [](const Inputs& in, const CheckParams&) {
            const LatinHypercube& q = qarg(in, 0);
            Tensor m = latin_to_tensor(q);
            if (!m.zero_one() || !is_k_stochastic(m, 1))
                return verdict(false, "M(Q) is not a (0,1) polystochastic matrix");
            return verdict(tensor_to_latin(m) == q);
        });
    add("qg-compose-dot", "the permutation of a composition is the dot product of permutations",
        "qg-compose-dot Q1 Q2", 2, 2, [](const Inputs& in, const CheckParams&) {
            Quasigroup f{qarg(in, 0)}, g{qarg(in, 1)};
            Tensor l = qg_to_tensor(qg_compose(f, g));
            Tensor r = dot(qg_to_tensor(f), qg_to_tensor(g));
            return all_equal({&l, &r}, "qg-compose-dot");
        });
    add("qg-dirprod-kron",
        "the permutation of a direct product is the Kronecker product of permutations",
        "qg-dirprod-kron Q1 Q2", 2, 2, [](const Inputs& in, const CheckParams&) {
            Quasigroup f{qarg(in, 0)}, g{qarg(in, 1)};
            Tensor l = qg_to_tensor(qg_direct_product(f, g));
            Tensor r = kronecker(qg_to_tensor(f), qg_to_tensor(g));
            return all_equal({&l, &r}, "qg-dirprod-kron");
        });
    add("transversal-compose-bound", "T(f.g) >= T(f) T(g)",
        "transversal-compose-bound Q1 Q2", 2, 2, [](const Inputs& in, const CheckParams&) {
            Quasigroup f{qarg(in, 0)}, g{qarg(in, 1)};
            BigInt tf = transversal_count(f.table), tg = transversal_count(g.table);
            BigInt tfg = transversal_count(qg_compose(f, g).table);
            return tfg >= tf * tg
                       ? verdict(true, tfg.str() + " >= " + tf.str() + "*" + tg.str())
                       : verdict(false, tfg.str() + " < " + tf.str() + "*" + tg.str());
        });
    add("oa-stochastic",
        "the scaled count matrix of an orthogonal array is (k-t)-stochastic and converts back",
        "oa-stochastic R", 1, 1, [](const Inputs& in, const CheckParams&) {
            const OrthogonalArray& r = rarg(in, 0);
            Tensor m;
            try {
                m = oa_to_tensor(r);
            } catch (const ValidationError& e) {
                return verdict(false, e.what());
            }
            Tensor normalized = scale(Rational(1, r.lambda), m);
            OrthogonalArray back = tensor_to_oa(normalized, r.t, r.lambda);
            auto sorted_rows = [](const OrthogonalArray& x) {
                auto rows = x.rows;
                std::sort(rows.begin(), rows.end());
                return rows;
            };
            return verdict(sorted_rows(back) == sorted_rows(r),
                           "degree " + std::to_string(r.k - r.t));
        });
    add("latin-oa-roundtrip", "the rows (a, q_a) of Q form an orthogonal array whose count "
                              "matrix is M(Q)",
        "latin-oa-roundtrip Q", 1, 1, [](const Inputs& in, const CheckParams&) {
            const LatinHypercube& q = qarg(in, 0);
            Tensor l = oa_to_tensor(latin_to_oa(q));
            Tensor r = latin_to_tensor(q);
            return all_equal({&l, &r}, "latin-oa-roundtrip");
        });
    add("iterated-zero",
        "iterated groups of even order and even arity have no transversals",
        "iterated-zero [--n n --d d]", 0, 0, [](const Inputs&, const CheckParams& p) {
            int n = p.n.value_or(2), d = p.d.value_or(2);
            if (n % 2 != 0 || d % 2 != 0)
                throw ValidationError("the zero-permanent family needs even n and even arity");
            BigInt t = transversal_count(iterated_group_hypercube(n, d));
            return t == 0 ? verdict(true, "transversals = 0")
                          : verdict(false, "transversals = " + t.str());
        });

    return defs;
}

} // namespace

const std::vector<CheckDef>& check_registry() {
    static const std::vector<CheckDef> defs = build_registry();
    return defs;
}

const CheckDef* find_check(const std::string& name) {
    for (const CheckDef& def : check_registry())
        if (name == def.name)
            return &def;
    return nullptr;
}

CheckOutcome run_check(const std::string& name, const std::vector<CheckInput>& inputs,
                       const CheckParams& params) {
    const CheckDef* def = find_check(name);
    if (!def)
        throw ValidationError("unknown check '" + name + "'");
    if (static_cast<int>(inputs.size()) < def->min_inputs ||
        static_cast<int>(inputs.size()) > def->max_inputs)
        throw ValidationError(std::string("check ") + def->name + " takes " +
                              std::to_string(def->min_inputs) + ".." +
                              std::to_string(def->max_inputs) + " inputs; usage: " + def->usage);
    return def->run(inputs, params);
}

} // namespace mdmat
