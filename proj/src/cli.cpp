#include "mdmat/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mdmat/io.hpp"
#include "mdmat/registry.hpp"

namespace mdmat {

namespace {

std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size())
                throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError(std::string("bad ") + what + " '" + item + "'");
        }
    }
    if (out.empty())
        throw ParseError(std::string("empty ") + what);
    return out;
}

std::vector<AxisSet> parse_sets(const std::string& s) {
    std::vector<AxisSet> out;
    std::stringstream ss(s);
    std::string group;
    while (std::getline(ss, group, ';'))
        out.push_back(AxisSet(parse_int_list(group, "axis set")));
    if (out.empty())
        throw ParseError("empty axis set list");
    return out;
}

PlaneSpec parse_fix(const std::string& s) {
    PlaneSpec spec;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ParseError("bad --fix entry '" + item + "', expected axis=value");
        try {
            spec.fixed[std::stoi(item.substr(0, eq))] = std::stoi(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw ParseError("bad --fix entry '" + item + "'");
        }
    }
    if (spec.fixed.empty())
        throw ParseError("empty --fix");
    return spec;
}

struct Session {
    Session(std::istream& i, std::ostream& o, std::ostream& e) : in(i), out(o), err(e) {}

    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    int threads = 1;
    std::uint64_t budget = kDefaultOracleBudget;
    std::string out_path;
    std::string format;
    int exit_code = 0;

    ParsedObject load(const std::string& path) const {
        if (path == "-") {
            if (!format.empty()) {
                if (format == "pmat")
                    return parse_pmat(in, "<stdin>");
                if (format == "latin")
                    return parse_latin(in, "<stdin>");
                return parse_oa(in, "<stdin>");
            }
            return parse_stream(in, "<stdin>");
        }
        return parse_file(path);
    }

    Tensor load_tensor(const std::string& path) const {
        ParsedObject obj = load(path);
        if (const Tensor* t = std::get_if<Tensor>(&obj))
            return *t;
        throw ValidationError(path + ": expected a pmat matrix");
    }

    LatinHypercube load_latin(const std::string& path) const {
        ParsedObject obj = load(path);
        if (const LatinHypercube* q = std::get_if<LatinHypercube>(&obj))
            return *q;
        throw ValidationError(path + ": expected a latin hypercube");
    }

    void emit(const std::string& text) const {
        if (out_path.empty()) {
            out << text;
            return;
        }
        std::ofstream f(out_path);
        if (!f)
            throw ValidationError("cannot write to " + out_path);
        f << text;
    }

    static const char* yn(bool b) { return b ? "yes" : "no"; }
};

void cmd_info(Session& s, const std::string& path) {
    ParsedObject obj = s.load(path);
    s.out << "kind: " << parsed_kind_name(obj) << "\n";
    if (const Tensor* t = std::get_if<Tensor>(&obj)) {
        s.out << "dimension: " << t->dim() << "\nextents:";
        for (int a = 1; a <= t->dim(); ++a)
            s.out << ' ' << t->extent(a);
        s.out << "\ncubical: " << Session::yn(t->cubical());
        if (t->cubical() && t->dim() >= 1)
            s.out << "\norder: " << t->order();
        s.out << "\nnonnegative: " << Session::yn(t->nonnegative());
        s.out << "\nzero-one: " << Session::yn(t->zero_one()) << "\n";
    } else if (const LatinHypercube* q = std::get_if<LatinHypercube>(&obj)) {
        s.out << "arity: " << q->d << "\norder: " << q->n << "\n";
    } else {
        const OrthogonalArray& r = std::get<OrthogonalArray>(obj);
        s.out << "strength: " << r.t << "\norder: " << r.n << "\ncolumns: " << r.k
              << "\nlambda: " << r.lambda << "\nrows: " << r.rows.size() << "\n";
    }
}

void cmd_stoch_report(Session& s, const std::string& path, int k) {
    Tensor a = s.load_tensor(path);
    if (k > 0) {
        s.out << "k-stochastic(" << k << "): " << Session::yn(is_k_stochastic(a, k)) << "\n";
        return;
    }
    StochasticityReport rep = stochasticity_report(a);
    s.out << "nonnegative: " << Session::yn(rep.nonnegative) << "\ndegrees:";
    for (int deg : rep.degrees)
        s.out << ' ' << deg;
    if (rep.degrees.empty())
        s.out << " none";
    s.out << "\npolystochastic: " << Session::yn(rep.polystochastic()) << "\n";
}

void scan_report(Session& s, const std::string& label, const Tensor& m) {
    if (!stochasticity_report(m).polystochastic())
        throw ValidationError("scan expects a polystochastic matrix");
    Rational per = permanent(m, s.threads);
    bool conjectured = (m.order() % 2 == 1) || (m.dim() % 2 == 0);
    bool consistent = !conjectured || per > Rational(0);
    s.out << label << ": dimension=" << m.dim() << " order=" << m.order()
          << " permanent=" << per.str() << " conjectured-positive=" << Session::yn(conjectured)
          << " consistent=" << Session::yn(consistent) << "\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    Session s{in, out, err};

    CLI::App app{"exact arithmetic for multidimensional matrices: products, stochasticity, "
                 "permanents, and latin/quasigroup/orthogonal-array codecs"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--threads", s.threads, "worker threads for permanent computation")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget", s.budget, "diagonal budget for the enumeration oracle");
    app.add_option("--out", s.out_path, "write the primary output to this file");
    app.add_option("--format", s.format, "input format when reading from '-' (stdin)")
        ->check(CLI::IsMember({"pmat", "latin", "oa"}));

    // ---- gen -----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate standard objects");
    gen->fallthrough();
    gen->require_subcommand(1);
    struct {
        int d = 2, n = 2, n1 = 2, n2 = 2;
    } g;
    auto* gen_j = gen->add_subcommand("J", "uniform matrix with entries 1/n");
    gen_j->add_option("--d", g.d)->required();
    gen_j->add_option("--n", g.n)->required();
    gen_j->callback([&] { s.emit(to_pmat(uniform_J(g.d, g.n))); });
    auto* gen_id = gen->add_subcommand("identity", "(0,1) matrix with ones on the main diagonal");
    gen_id->add_option("--d", g.d)->required();
    gen_id->add_option("--n", g.n)->required();
    gen_id->callback([&] { s.emit(to_pmat(identity_diag(g.d, g.n))); });
    auto* gen_ig = gen->add_subcommand("iterated-group", "Cayley table of the iterated group Z_n");
    gen_ig->add_option("--n", g.n)->required();
    gen_ig->add_option("--d", g.d)->required();
    gen_ig->callback([&] { s.emit(to_latin(iterated_group_hypercube(g.n, g.d))); });
    auto* gen_p = gen->add_subcommand("covering-P", "standard row-selection matrix");
    gen_p->add_option("--n1", g.n1)->required();
    gen_p->add_option("--n2", g.n2)->required();
    gen_p->callback([&] { s.emit(to_pmat(standard_covering_P(g.n1, g.n2).P)); });

    // ---- info ------------------------------------------------------------
    auto* info = app.add_subcommand("info", "parse a file and describe it");
    info->fallthrough();
    std::string info_path;
    info->add_option("file", info_path)->required();
    info->callback([&] { cmd_info(s, info_path); });

    // ---- op ----------------------------------------------------------------
    auto* op = app.add_subcommand("op", "apply one operation and print the result");
    op->fallthrough();
    op->require_subcommand(1);
    struct {
        std::vector<std::string> files;
        std::string sets, perm, fix, sigma;
        int axis = 1, i = 0, j = 0;
        std::string c1 = "1", c2 = "1";
    } o;
    auto add_op = [&](const char* name, const char* desc, int nfiles,
                      std::function<void()> body) {
        auto* sub = op->add_subcommand(name, desc);
        sub->fallthrough();
        sub->add_option("files", o.files)->expected(nfiles);
        return std::pair{sub, std::move(body)};
    };
    {
        auto [sub, body] = add_op("outer", "outer product", 2, [&] {
            s.emit(to_pmat(outer(s.load_tensor(o.files[0]), s.load_tensor(o.files[1]))));
        });
        sub->callback(body);
    }
    {
        auto [sub, body] = add_op("kron", "Kronecker product", 2, [&] {
            s.emit(to_pmat(kronecker(s.load_tensor(o.files[0]), s.load_tensor(o.files[1]))));
        });
        sub->callback(body);
    }
    {
        auto [sub, body] = add_op("contract", "contraction over axis sets", 1, [&] {
            s.emit(to_pmat(contract(s.load_tensor(o.files[0]), parse_sets(o.sets))));
        });
        sub->add_option("--sets", o.sets, "e.g. 1,2;3")->required();
        sub->callback(body);
    }
    {
        auto [sub, body] = add_op("project", "projection over axis sets", 1, [&] {
            s.emit(to_pmat(project(s.load_tensor(o.files[0]), parse_sets(o.sets))));
        });
        sub->add_option("--sets", o.sets, "e.g. 1,2;3")->required();
        sub->callback(body);
    }
    {
        auto [sub, body] = add_op("dot", "(i,j)-dot product (defaults to the dot product)", 2, [&] {
            Tensor a = s.load_tensor(o.files[0]), b = s.load_tensor(o.files[1]);
            int i = o.i > 0 ? o.i : a.dim();
            int j = o.j > 0 ? o.j : 1;
            if (o.i == 0 && o.j == 0 && (!a.cubical() || !b.cubical() || a.order() != b.order()))
                throw ValidationError("dot product requires cubical factors of one order");
            s.emit(to_pmat(dot_ij(a, i, b, j)));
        });
        sub->add_option("--i", o.i);
        sub->add_option("--j", o.j);
        sub->callback(body);
    }
    {
        auto* sub = op->add_subcommand("sdot", "S-dot product of file:axis factors");
        sub->fallthrough();
        sub->add_option("factors", o.files, "file:axis, at least two")->expected(-2);
        sub->callback([&] {
            std::vector<std::pair<Tensor, int>> factors;
            for (const std::string& spec : o.files) {
                auto colon = spec.rfind(':');
                if (colon == std::string::npos)
                    throw ParseError("sdot factor '" + spec + "' must be file:axis");
                int axis;
                try {
                    axis = std::stoi(spec.substr(colon + 1));
                } catch (const std::exception&) {
                    throw ParseError("bad sdot axis in '" + spec + "'");
                }
                factors.emplace_back(s.load_tensor(spec.substr(0, colon)), axis);
            }
            s.emit(to_pmat(s_dot(factors)));
        });
    }
    {
        auto [sub, body] = add_op("circle", "circle product", 2, [&] {
            s.emit(to_pmat(circle(s.load_tensor(o.files[0]), s.load_tensor(o.files[1]))));
        });
        sub->callback(body);
    }
    {
        auto [sub, body] = add_op("transpose", "permute axes", 1, [&] {
            s.emit(to_pmat(transpose(s.load_tensor(o.files[0]),
                                     parse_int_list(o.perm, "permutation"))));
        });
        sub->add_option("--perm", o.perm, "axis permutation, e.g. 2,1")->required();
        sub->callback(body);
    }
    {
        auto [sub, body] = add_op("permute", "permute hyperplanes of one direction", 1, [&] {
            s.emit(to_pmat(permute_hyperplanes(s.load_tensor(o.files[0]), o.axis,
                                               parse_int_list(o.perm, "permutation"))));
        });
        sub->add_option("--axis", o.axis)->required();
        sub->add_option("--perm", o.perm)->required();
        sub->callback(body);
    }
    {
        auto [sub, body] = add_op("plane", "extract a plane", 1, [&] {
            s.emit(to_pmat(extract_plane(s.load_tensor(o.files[0]), parse_fix(o.fix))));
        });
        sub->add_option("--fix", o.fix, "fixed axes, e.g. 1=2,3=1")->required();
        sub->callback(body);
    }
    {
        auto [sub, body] = add_op("combine", "linear combination c1*A + c2*B", 2, [&] {
            s.emit(to_pmat(linear_combine(Rational::parse(o.c1), s.load_tensor(o.files[0]),
                                          Rational::parse(o.c2), s.load_tensor(o.files[1]))));
        });
        sub->add_option("--c1", o.c1);
        sub->add_option("--c2", o.c2);
        sub->callback(body);
    }
    {
        auto [sub, body] = add_op("reduced-outer", "diagonal-merged outer product", 2, [&] {
            Tensor a = s.load_tensor(o.files[0]);
            std::vector<int> sigma;
            if (!o.sigma.empty())
                sigma = parse_int_list(o.sigma, "permutation");
            else
                for (int v = 1; v <= a.order(); ++v)
                    sigma.push_back(v);
            s.emit(to_pmat(reduced_outer(a, s.load_tensor(o.files[1]), sigma)));
        });
        sub->add_option("--sigma", o.sigma, "symbol permutation");
        sub->callback(body);
    }
    {
        auto [sub, body] = add_op("qg-compose", "compose two quasigroups (latin inputs)", 2, [&] {
            Quasigroup f{s.load_latin(o.files[0])}, g2{s.load_latin(o.files[1])};
            s.emit(to_latin(qg_compose(f, g2).table));
        });
        sub->callback(body);
    }
    {
        auto [sub, body] = add_op("qg-direct", "direct product of two quasigroups", 2, [&] {
            Quasigroup f{s.load_latin(o.files[0])}, g2{s.load_latin(o.files[1])};
            s.emit(to_latin(qg_direct_product(f, g2).table));
        });
        sub->callback(body);
    }

    // ---- per -------------------------------------------------------------
    auto* per = app.add_subcommand("per", "permanent of a matrix");
    per->fallthrough();
    std::string per_path;
    bool per_oracle = false;
    per->add_option("file", per_path)->required();
    per->add_flag("--oracle", per_oracle, "use the enumeration oracle");
    per->callback([&] {
        Tensor a = s.load_tensor(per_path);
        Rational v = per_oracle ? permanent_oracle(a, s.budget) : permanent(a, s.threads);
        s.out << v.str() << "\n";
    });

    // ---- diag ------------------------------------------------------------
    auto* diag = app.add_subcommand("diag", "list nonzero (or positive) diagonals");
    diag->fallthrough();
    std::string diag_path;
    bool diag_positive = false;
    std::size_t diag_limit = 1000;
    diag->add_option("file", diag_path)->required();
    diag->add_flag("--positive", diag_positive, "restrict to positive diagonals");
    diag->add_option("--limit", diag_limit);
    diag->callback([&] {
        Tensor a = s.load_tensor(diag_path);
        if (diag_positive)
            s.out << "positive-diagonal: " << Session::yn(has_positive_diagonal(a)) << "\n";
        auto diags = list_diagonals(a, diag_positive, diag_limit);
        for (const Diagonal& dg : diags) {
            for (std::size_t i = 0; i < dg.indices.size(); ++i) {
                if (i)
                    s.out << ' ';
                for (std::size_t c = 0; c < dg.indices[i].size(); ++c)
                    s.out << (c ? "," : "") << dg.indices[i][c];
            }
            s.out << "\n";
        }
        s.out << "count: " << diags.size() << (diags.size() == diag_limit ? " (limit)" : "")
              << "\n";
    });

    // ---- stoch ---------------------------------------------------------------
    auto* stoch = app.add_subcommand("stoch", "stochasticity report or product degree predictions");
    stoch->fallthrough();
    std::string stoch_path;
    int stoch_k = 0;
    stoch->add_option("file", stoch_path);
    stoch->add_option("--k", stoch_k, "test one degree instead of reporting all");
    struct {
        std::string kind;
        int d1 = 0, k1 = 0, n1 = 0, d2 = 0, k2 = 0, n2 = 0, ell = 0;
    } pr;
    auto* predict = stoch->add_subcommand("predict", "degree and scale predicted for a product");
    predict->fallthrough();
    predict->add_option("--kind", pr.kind)->required()->check(
        CLI::IsMember({"outer", "kronecker", "kron", "contraction", "contract", "projection",
                       "project", "dot", "circle"}));
    predict->add_option("--d1", pr.d1)->required();
    predict->add_option("--k1", pr.k1)->required();
    predict->add_option("--n1", pr.n1)->required();
    predict->add_option("--d2", pr.d2);
    predict->add_option("--k2", pr.k2);
    predict->add_option("--n2", pr.n2);
    predict->add_option("--ell", pr.ell);
    predict->callback([&] {
        auto p = predicted_product_stochasticity(product_kind_from_name(pr.kind), pr.d1, pr.k1,
                                                 pr.n1, pr.d2 ? pr.d2 : pr.d1,
                                                 pr.k2 ? pr.k2 : 1, pr.n2 ? pr.n2 : pr.n1,
                                                 pr.ell);
        s.out << "kind: " << product_kind_name(p.kind)
              << "\napplicable: " << Session::yn(p.applicable) << "\n";
        if (p.applicable)
            s.out << "r: " << p.r << "\nscale: " << p.scale.str() << "\n";
        else
            s.out << "reason: " << p.reason << "\n";
    });
    stoch->callback([&] {
        if (stoch->got_subcommand(predict))
            return;
        if (stoch_path.empty())
            throw ParseError("stoch needs a file or the predict subcommand");
        cmd_stoch_report(s, stoch_path, stoch_k);
    });

    // ---- check -----------------------------------------------------------------
    auto* check = app.add_subcommand("check", "verify a named identity on given inputs");
    check->fallthrough();
    std::string check_name;
    std::vector<std::string> check_files;
    bool check_list = false;
    struct {
        std::string sets, sigma, lambda;
        int i = 0, j = 0, n = 0, d = 0, ell = 0, t = 0;
    } cp;
    check->add_option("name", check_name);
    check->add_option("files", check_files);
    check->add_flag("--list", check_list, "list all checks");
    check->add_option("--sets", cp.sets, "axis sets, e.g. 1,2;3");
    check->add_option("--sigma", cp.sigma, "permutation, e.g. 2,1");
    check->add_option("--lambda", cp.lambda, "rational scalar");
    check->add_option("--i", cp.i);
    check->add_option("--j", cp.j);
    check->add_option("--n", cp.n);
    check->add_option("--d", cp.d);
    check->add_option("--ell", cp.ell);
    check->add_option("--t", cp.t);
    check->callback([&] {
        if (check_list) {
            for (const CheckDef& def : check_registry())
                s.out << def.name << "\n  usage: " << def.usage << "\n  " << def.summary << "\n";
            return;
        }
        if (check_name.empty())
            throw ParseError("check needs a name (or --list)");
        CheckParams params;
        params.budget = s.budget;
        params.threads = s.threads;
        if (!cp.sets.empty())
            params.sets = parse_sets(cp.sets);
        if (!cp.sigma.empty())
            params.sigma = parse_int_list(cp.sigma, "permutation");
        if (!cp.lambda.empty())
            params.lambda = Rational::parse(cp.lambda);
        if (cp.i)
            params.i = cp.i;
        if (cp.j)
            params.j = cp.j;
        if (cp.n)
            params.n = cp.n;
        if (cp.d)
            params.d = cp.d;
        if (cp.ell)
            params.ell = cp.ell;
        if (cp.t)
            params.t = cp.t;
        std::vector<CheckInput> inputs;
        for (const std::string& f : check_files) {
            ParsedObject obj = s.load(f);
            std::visit([&](auto&& v) { inputs.push_back(std::move(v)); }, std::move(obj));
        }
        CheckOutcome outcome = run_check(check_name, inputs, params);
        s.out << "check " << check_name << ": " << (outcome.holds ? "HOLDS" : "VIOLATED");
        if (!outcome.detail.empty())
            s.out << " (" << outcome.detail << ")";
        s.out << "\n";
        if (!outcome.holds)
            s.exit_code = 3;
    });

    // ---- convert -----------------------------------------------------------------
    auto* convert = app.add_subcommand("convert", "convert between pmat, latin and oa");
    convert->fallthrough();
    std::string conv_path, conv_to;
    int conv_t = 0, conv_lambda = 1;
    bool conv_normalize = false;
    convert->add_option("file", conv_path)->required();
    convert->add_option("--to", conv_to)->required()->check(CLI::IsMember({"pmat", "latin", "oa"}));
    convert->add_option("--t", conv_t, "strength for pmat -> oa");
    convert->add_option("--lambda", conv_lambda, "index for pmat -> oa");
    convert->add_flag("--normalize", conv_normalize, "emit (1/lambda) * counts for oa -> pmat");
    convert->callback([&] {
        ParsedObject obj = s.load(conv_path);
        if (const LatinHypercube* q = std::get_if<LatinHypercube>(&obj)) {
            if (conv_to == "latin")
                s.emit(to_latin(*q));
            else if (conv_to == "pmat")
                s.emit(to_pmat(latin_to_tensor(*q)));
            else
                s.emit(to_oa(latin_to_oa(*q)));
            return;
        }
        if (const OrthogonalArray* r = std::get_if<OrthogonalArray>(&obj)) {
            if (conv_to == "oa") {
                s.emit(to_oa(*r));
            } else if (conv_to == "pmat") {
                Tensor m = oa_to_tensor(*r);
                s.emit(to_pmat(conv_normalize ? scale(Rational(1, r->lambda), m) : m));
            } else {
                Tensor m = scale(Rational(1, r->lambda), oa_to_tensor(*r));
                s.emit(to_latin(tensor_to_latin(m)));
            }
            return;
        }
        const Tensor& t = std::get<Tensor>(obj);
        if (conv_to == "pmat") {
            s.emit(to_pmat(t));
        } else if (conv_to == "latin") {
            s.emit(to_latin(tensor_to_latin(t)));
        } else {
            if (conv_t < 1)
                throw ValidationError("pmat -> oa needs --t");
            s.emit(to_oa(tensor_to_oa(t, conv_t, conv_lambda)));
        }
    });

    // ---- transversals ---------------------------------------------------------
    auto* trans = app.add_subcommand("transversals", "count transversals of a latin hypercube");
    trans->fallthrough();
    std::string trans_path;
    bool trans_list = false;
    std::size_t trans_limit = 1000;
    trans->add_option("file", trans_path)->required();
    trans->add_flag("--list", trans_list);
    trans->add_option("--limit", trans_limit);
    trans->callback([&] {
        LatinHypercube q = s.load_latin(trans_path);
        if (trans_list) {
            Tensor m = latin_to_tensor(q);
            for (const Diagonal& dg : list_diagonals(m, true, trans_limit)) {
                for (std::size_t i = 0; i < dg.indices.size(); ++i) {
                    const Index& idx = dg.indices[i];
                    if (i)
                        s.out << ' ';
                    s.out << '(';
                    for (std::size_t c = 0; c + 1 < idx.size(); ++c)
                        s.out << (c ? "," : "") << idx[c];
                    s.out << ")=" << idx.back();
                }
                s.out << "\n";
            }
        }
        s.out << transversal_count(q).str() << "\n";
    });

    // ---- scan ----------------------------------------------------------------
    auto* scan = app.add_subcommand("scan", "explore permanents of permutation matrices");
    scan->fallthrough();
    scan->require_subcommand(1);
    struct {
        int n = 2, d = 2;
        bool all = false;
        std::string path;
    } sc;
    auto* scan_ig = scan->add_subcommand("iterated-group", "scan M(Z_n) tables");
    scan_ig->fallthrough();
    scan_ig->add_option("--n", sc.n)->required();
    scan_ig->add_option("--d", sc.d)->required();
    scan_ig->add_flag("--all", sc.all, "scan all orders <= n and arities <= d");
    scan_ig->callback([&] {
        int n_lo = sc.all ? 1 : sc.n, d_lo = sc.all ? 2 : sc.d;
        for (int nn = n_lo; nn <= sc.n; ++nn)
            for (int dd = d_lo; dd <= sc.d; ++dd) {
                std::ostringstream label;
                label << "iterated-group n=" << nn << " d=" << dd;
                scan_report(s, label.str(), latin_to_tensor(iterated_group_hypercube(nn, dd)));
            }
    });
    auto* scan_file = scan->add_subcommand("file", "scan a matrix or latin hypercube file");
    scan_file->fallthrough();
    scan_file->add_option("file", sc.path)->required();
    scan_file->callback([&] {
        ParsedObject obj = s.load(sc.path);
        if (const LatinHypercube* q = std::get_if<LatinHypercube>(&obj))
            scan_report(s, sc.path, latin_to_tensor(*q));
        else if (const Tensor* t = std::get_if<Tensor>(&obj))
            scan_report(s, sc.path, *t);
        else
            throw ValidationError("scan expects a pmat or latin file");
    });

    // Parse and run. Callbacks throw domain errors mapped to exit codes here.
    std::vector<const char*> argv;
    argv.push_back("mdmat");
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    }
    return s.exit_code;
}

const std::vector<OpCoverage>& cli_coverage() {
    static const std::vector<OpCoverage> table = {
        {"build_tensor", {"info", "{DIR}/cube3_per2.pmat"}},
        {"transpose", {"op", "transpose", "{DIR}/mixed22.pmat", "--perm", "2,1"}},
        {"permute_hyperplanes",
         {"op", "permute", "{DIR}/cube3_per2.pmat", "--axis", "1", "--perm", "2,1,3"}},
        {"extract_plane", {"op", "plane", "{DIR}/cube3_per2.pmat", "--fix", "1=2"}},
        {"linear_combine",
         {"op", "combine", "{DIR}/mixed22.pmat", "{DIR}/point22.pmat", "--c1", "1/2", "--c2",
          "-3"}},
        {"uniform_J", {"gen", "J", "--d", "3", "--n", "2"}},
        {"identity_diag", {"gen", "identity", "--d", "2", "--n", "3"}},
        {"outer", {"op", "outer", "{DIR}/point22.pmat", "{DIR}/point11.pmat"}},
        {"kronecker", {"op", "kron", "{DIR}/cube2_ones.pmat", "{DIR}/cube2_parity.pmat"}},
        {"contract", {"op", "contract", "{DIR}/cube3_per2.pmat", "--sets", "1,2"}},
        {"project", {"op", "project", "{DIR}/cube3_per2.pmat", "--sets", "1;3"}},
        {"dot_ij", {"op", "dot", "{DIR}/point22.pmat", "{DIR}/point11.pmat", "--i", "2", "--j",
                    "1"}},
        {"s_dot", {"op", "sdot", "{DIR}/point22.pmat:2", "{DIR}/point11.pmat:1"}},
        {"circle", {"op", "circle", "{DIR}/cube3_per2.pmat", "{DIR}/colmat3.pmat"}},
        {"is_k_stochastic", {"stoch", "{DIR}/uniform_d3_n2.pmat", "--k", "1"}},
        {"stochasticity_report", {"stoch", "{DIR}/uniform_d3_n2.pmat"}},
        {"predicted_product_stochasticity",
         {"stoch", "predict", "--kind", "outer", "--d1", "2", "--k1", "1", "--n1", "2", "--d2",
          "2", "--k2", "1", "--n2", "2"}},
        {"verify_eigenpair",
         {"check", "eigen", "{DIR}/uniform_d2_n2.pmat", "{DIR}/vec_1m1.pmat", "--lambda", "0"}},
        {"standard_covering_P", {"gen", "covering-P", "--n1", "2", "--n2", "2"}},
        {"check_covering",
         {"check", "covering", "{DIR}/cover_big22.pmat", "{DIR}/mixed22.pmat",
          "{DIR}/coverP_2_2.pmat"}},
        {"permanent", {"per", "{DIR}/cube3_per2.pmat"}},
        {"permanent_oracle", {"per", "{DIR}/cube3_per2.pmat", "--oracle"}},
        {"has_positive_diagonal", {"diag", "{DIR}/cube3_per2.pmat", "--positive"}},
        {"reduced_outer",
         {"op", "reduced-outer", "{DIR}/point22.pmat", "{DIR}/point11.pmat", "--sigma", "2,1"}},
        {"latin_to_tensor", {"convert", "{DIR}/z3.latin", "--to", "pmat"}},
        {"tensor_to_latin", {"convert", "{DIR}/permtensor_z2.pmat", "--to", "latin"}},
        {"transversal_count", {"transversals", "{DIR}/z3.latin"}},
        {"iterated_group_hypercube", {"gen", "iterated-group", "--n", "3", "--d", "2"}},
        {"oa_to_tensor", {"convert", "{DIR}/pairs22.oa", "--to", "pmat"}},
        {"tensor_to_oa",
         {"convert", "{DIR}/permtensor_z2.pmat", "--to", "oa", "--t", "2", "--lambda", "1"}},
        {"qg_compose", {"op", "qg-compose", "{DIR}/z2.latin", "{DIR}/z2.latin"}},
        {"qg_direct_product", {"op", "qg-direct", "{DIR}/z2.latin", "{DIR}/z3.latin"}},
        {"parse_file", {"info", "{DIR}/pairs22.oa"}},
        {"execute", {"check", "dot-stoch-zero-witness"}},
    };
    return table;
}

} // namespace mdmat
