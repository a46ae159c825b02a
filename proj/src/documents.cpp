#include "workbench/documents.hpp"

#include "json_util.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

namespace wb {

namespace detail {

nlohmann::json scalar_json(const Scalar& s) {
    static const Int lo = Int(std::numeric_limits<std::int64_t>::min());
    static const Int hi = Int(std::numeric_limits<std::int64_t>::max());
    if (denom(s) == 1) {
        const Int n = numer(s);
        if (n >= lo && n <= hi) return n.convert_to<std::int64_t>();
    }
    return scalar_to_string(s);
}

std::string dump_canonical(const nlohmann::json& j) { return j.dump(2) + "\n"; }

} // namespace detail

namespace {

using nlohmann::json;

constexpr std::pair<DocKind, const char*> kKindNames[] = {
    {DocKind::hom_algebra, "hom_algebra"},
    {DocKind::bihom_algebra, "bihom_algebra"},
    {DocKind::hom_dendriform, "hom_dendriform"},
    {DocKind::bihom_dendriform, "bihom_dendriform"},
    {DocKind::bimodule, "bimodule"},
    {DocKind::matched_pair, "matched_pair"},
    {DocKind::bialgebra_data, "bialgebra_data"},
    {DocKind::form, "form"},
    {DocKind::op, "operator"},
};

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw DocumentError(path, msg);
}

// Wraps one JSON object, tracks which keys were consumed, and rejects any
// leftovers. Every object in a document goes through one of these.
class Fields {
public:
    Fields(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) fail(path_, "expected an object");
    }

    const json* find(const char* key) {
        used_.insert(key);
        auto it = j_.find(key);
        return it == j_.end() ? nullptr : &*it;
    }

    const json& require(const char* key) {
        const json* v = find(key);
        if (!v) fail(path_, std::string("missing field \"") + key + "\"");
        return *v;
    }

    std::string member(const char* key) const { return path_ + "." + key; }
    const std::string& path() const { return path_; }

    void finish() const {
        for (auto it = j_.begin(); it != j_.end(); ++it)
            if (!used_.count(it.key())) fail(path_ + "." + it.key(), "unknown field");
    }

private:
    const json& j_;
    std::string path_;
    std::set<std::string> used_;
};

std::string elem(const std::string& path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
}

Scalar read_scalar(const json& v, const std::string& path) {
    if (v.is_number_integer() && !v.is_number_unsigned()) return Scalar(Int(v.get<std::int64_t>()));
    if (v.is_number_unsigned()) return Scalar(Int(v.get<std::uint64_t>()));
    if (v.is_string()) {
        const std::string text = v.get<std::string>();
        if (auto s = parse_scalar(text)) return *s;
        fail(path, "non-rational scalar \"" + text + "\"");
    }
    fail(path, "non-rational scalar " + v.dump());
}

long read_integer(const json& v, const std::string& path, const char* what) {
    if (v.is_number_unsigned()) {
        const auto u = v.get<std::uint64_t>();
        if (u > 1000000) fail(path, std::string(what) + " is out of range");
        return static_cast<long>(u);
    }
    if (v.is_number_integer()) return static_cast<long>(v.get<std::int64_t>());
    fail(path, std::string("expected an integer ") + what);
}

int read_dim(const json& v, const std::string& path) {
    const long d = read_integer(v, path, "dimension");
    if (d < 0) fail(path, "dimension must be nonnegative");
    const int cap = max_document_dim();
    if (d > cap)
        fail(path, "dimension " + std::to_string(d) + " exceeds WORKBENCH_MAX_DIM (" +
                       std::to_string(cap) + ")");
    return static_cast<int>(d);
}

// 1-based basis index in a space of the given dimension; returns 0-based.
int read_index(const json& v, int dim, const std::string& path) {
    const long i = read_integer(v, path, "index");
    if (i < 1 || i > dim)
        fail(path, "index " + std::to_string(i) + " out of range 1.." + std::to_string(dim));
    return static_cast<int>(i - 1);
}

Mat read_mat(const json& v, int rows, int cols, const std::string& path) {
    if (!v.is_array()) fail(path, "expected a matrix (array of rows)");
    if (static_cast<int>(v.size()) != rows)
        fail(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(v.size()));
    Mat m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const json& row = v[static_cast<std::size_t>(r)];
        const std::string rp = elem(path, static_cast<std::size_t>(r));
        if (!row.is_array()) fail(rp, "expected a row array");
        if (static_cast<int>(row.size()) != cols)
            fail(rp, "expected " + std::to_string(cols) + " entries, got " +
                         std::to_string(row.size()));
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = read_scalar(row[static_cast<std::size_t>(c)],
                                     elem(rp, static_cast<std::size_t>(c)));
    }
    return m;
}

// Rectangular matrix of unspecified shape (bare operator maps). Row and
// column counts still honor the dimension cap.
Mat read_free_mat(const json& v, const std::string& path) {
    if (!v.is_array()) fail(path, "expected a matrix (array of rows)");
    const int rows = static_cast<int>(v.size());
    const int cap = max_document_dim();
    if (rows > cap)
        fail(path, "dimension " + std::to_string(rows) + " exceeds WORKBENCH_MAX_DIM (" +
                       std::to_string(cap) + ")");
    int cols = 0;
    if (rows > 0) {
        const json& first = v[0];
        if (!first.is_array()) fail(elem(path, 0), "expected a row array");
        cols = static_cast<int>(first.size());
        if (cols > cap)
            fail(path, "dimension " + std::to_string(cols) + " exceeds WORKBENCH_MAX_DIM (" +
                           std::to_string(cap) + ")");
    }
    return read_mat(v, rows, cols, path);
}

MultTensor read_mult(const json& v, int dim, const std::string& path) {
    if (!v.is_array()) fail(path, "expected an array of [i, j, k, value] entries");
    MultTensor m(dim);
    std::set<std::tuple<int, int, int>> seen;
    for (std::size_t n = 0; n < v.size(); ++n) {
        const std::string ep = elem(path, n);
        const json& e = v[n];
        if (!e.is_array() || e.size() != 4) fail(ep, "expected [i, j, k, value]");
        const int i = read_index(e[0], dim, elem(ep, 0));
        const int j = read_index(e[1], dim, elem(ep, 1));
        const int k = read_index(e[2], dim, elem(ep, 2));
        if (!seen.insert({i, j, k}).second) fail(ep, "duplicate entry");
        m.at(i, j, k) = read_scalar(e[3], elem(ep, 3));
    }
    return m;
}

// Coproduct entries are [k, u, t, value]: delta(e_k) gains value * e_u (x) e_t.
CoprodTensor read_coprod(const json& v, int dim, const std::string& path) {
    if (!v.is_array()) fail(path, "expected an array of [k, u, t, value] entries");
    CoprodTensor cp(dim);
    std::set<std::tuple<int, int, int>> seen;
    for (std::size_t n = 0; n < v.size(); ++n) {
        const std::string ep = elem(path, n);
        const json& e = v[n];
        if (!e.is_array() || e.size() != 4) fail(ep, "expected [k, u, t, value]");
        const int k = read_index(e[0], dim, elem(ep, 0));
        const int u = read_index(e[1], dim, elem(ep, 1));
        const int t = read_index(e[2], dim, elem(ep, 2));
        if (!seen.insert({k, u, t}).second) fail(ep, "duplicate entry");
        cp.at(k, u, t) = read_scalar(e[3], elem(ep, 3));
    }
    return cp;
}

ActionFamily read_family(const json& v, int count, int dv, const std::string& path) {
    if (!v.is_array()) fail(path, "expected an array of matrices, one per basis vector");
    if (static_cast<int>(v.size()) != count)
        fail(path,
             "expected " + std::to_string(count) + " matrices, got " + std::to_string(v.size()));
    ActionFamily fam;
    fam.reserve(static_cast<std::size_t>(count));
    for (std::size_t n = 0; n < v.size(); ++n) fam.push_back(read_mat(v[n], dv, dv, elem(path, n)));
    return fam;
}

// -- algebra-like blocks -------------------------------------------------

HomAlgebra read_hom_algebra(Fields& f) {
    HomAlgebra a;
    a.dim = read_dim(f.require("dim"), f.member("dim"));
    a.mult = read_mult(f.require("mult"), a.dim, f.member("mult"));
    a.alpha = read_mat(f.require("alpha"), a.dim, a.dim, f.member("alpha"));
    return a;
}

BiHomAlgebra read_bihom_algebra(Fields& f) {
    BiHomAlgebra a;
    a.dim = read_dim(f.require("dim"), f.member("dim"));
    a.mult = read_mult(f.require("mult"), a.dim, f.member("mult"));
    a.alpha1 = read_mat(f.require("alpha1"), a.dim, a.dim, f.member("alpha1"));
    a.alpha2 = read_mat(f.require("alpha2"), a.dim, a.dim, f.member("alpha2"));
    return a;
}

HomDendriform read_hom_dendriform(Fields& f) {
    HomDendriform d;
    d.dim = read_dim(f.require("dim"), f.member("dim"));
    d.prec = read_mult(f.require("prec"), d.dim, f.member("prec"));
    d.succ = read_mult(f.require("succ"), d.dim, f.member("succ"));
    d.alpha = read_mat(f.require("alpha"), d.dim, d.dim, f.member("alpha"));
    return d;
}

BiHomDendriform read_bihom_dendriform(Fields& f) {
    BiHomDendriform d;
    d.dim = read_dim(f.require("dim"), f.member("dim"));
    d.prec = read_mult(f.require("prec"), d.dim, f.member("prec"));
    d.succ = read_mult(f.require("succ"), d.dim, f.member("succ"));
    d.alpha = read_mat(f.require("alpha"), d.dim, d.dim, f.member("alpha"));
    d.beta = read_mat(f.require("beta"), d.dim, d.dim, f.member("beta"));
    return d;
}

using AlgLike = std::variant<HomAlgebra, BiHomAlgebra, HomDendriform, BiHomDendriform>;

DocKind read_kind_field(Fields& f) {
    const json& kj = f.require("kind");
    if (!kj.is_string()) fail(f.member("kind"), "expected a string");
    const std::string name = kj.get<std::string>();
    const auto k = kind_from_name(name);
    if (!k) fail(f.member("kind"), "unknown kind \"" + name + "\"");
    return *k;
}

AlgLike read_alg_like(const json& v, const std::string& path) {
    Fields f(v, path);
    AlgLike out;
    switch (read_kind_field(f)) {
    case DocKind::hom_algebra: out = read_hom_algebra(f); break;
    case DocKind::bihom_algebra: out = read_bihom_algebra(f); break;
    case DocKind::hom_dendriform: out = read_hom_dendriform(f); break;
    case DocKind::bihom_dendriform: out = read_bihom_dendriform(f); break;
    default:
        fail(f.member("kind"), "expected an algebra kind (hom_algebra, bihom_algebra, "
                               "hom_dendriform, bihom_dendriform)");
    }
    f.finish();
    return out;
}

// -- per-kind payloads -----------------------------------------------------

DocPayload read_bimodule_payload(Fields& f) {
    const AlgLike alg = read_alg_like(f.require("algebra"), f.member("algebra"));
    const int dv = read_dim(f.require("dim_v"), f.member("dim_v"));
    if (std::holds_alternative<HomAlgebra>(alg)) {
        HomBimodule b;
        b.algebra = std::get<HomAlgebra>(alg);
        b.dim_v = dv;
        b.l = read_family(f.require("l"), b.algebra.dim, dv, f.member("l"));
        b.r = read_family(f.require("r"), b.algebra.dim, dv, f.member("r"));
        b.beta = read_mat(f.require("beta"), dv, dv, f.member("beta"));
        return b;
    }
    if (std::holds_alternative<BiHomAlgebra>(alg)) {
        BiHomBimodule b;
        b.algebra = std::get<BiHomAlgebra>(alg);
        b.dim_v = dv;
        b.l = read_family(f.require("l"), b.algebra.dim, dv, f.member("l"));
        b.r = read_family(f.require("r"), b.algebra.dim, dv, f.member("r"));
        b.beta1 = read_mat(f.require("beta1"), dv, dv, f.member("beta1"));
        b.beta2 = read_mat(f.require("beta2"), dv, dv, f.member("beta2"));
        return b;
    }
    if (std::holds_alternative<HomDendriform>(alg)) {
        HomDendriformBimodule b;
        b.algebra = std::get<HomDendriform>(alg);
        b.dim_v = dv;
        b.lsucc = read_family(f.require("lsucc"), b.algebra.dim, dv, f.member("lsucc"));
        b.rsucc = read_family(f.require("rsucc"), b.algebra.dim, dv, f.member("rsucc"));
        b.lprec = read_family(f.require("lprec"), b.algebra.dim, dv, f.member("lprec"));
        b.rprec = read_family(f.require("rprec"), b.algebra.dim, dv, f.member("rprec"));
        b.beta = read_mat(f.require("beta"), dv, dv, f.member("beta"));
        return b;
    }
    BiHomDendriformBimodule b;
    b.algebra = std::get<BiHomDendriform>(alg);
    b.dim_v = dv;
    b.lsucc = read_family(f.require("lsucc"), b.algebra.dim, dv, f.member("lsucc"));
    b.rsucc = read_family(f.require("rsucc"), b.algebra.dim, dv, f.member("rsucc"));
    b.lprec = read_family(f.require("lprec"), b.algebra.dim, dv, f.member("lprec"));
    b.rprec = read_family(f.require("rprec"), b.algebra.dim, dv, f.member("rprec"));
    b.beta1 = read_mat(f.require("beta1"), dv, dv, f.member("beta1"));
    b.beta2 = read_mat(f.require("beta2"), dv, dv, f.member("beta2"));
    return b;
}

DocPayload read_matched_pair_payload(Fields& f) {
    const AlgLike A = read_alg_like(f.require("A"), f.member("A"));
    const AlgLike B = read_alg_like(f.require("B"), f.member("B"));
    if (A.index() != B.index()) fail(f.member("B"), "matched pair sides must share a kind");
    if (std::holds_alternative<HomAlgebra>(A)) {
        HomMatchedPair p;
        p.A = std::get<HomAlgebra>(A);
        p.B = std::get<HomAlgebra>(B);
        p.lA = read_family(f.require("lA"), p.A.dim, p.B.dim, f.member("lA"));
        p.rA = read_family(f.require("rA"), p.A.dim, p.B.dim, f.member("rA"));
        p.lB = read_family(f.require("lB"), p.B.dim, p.A.dim, f.member("lB"));
        p.rB = read_family(f.require("rB"), p.B.dim, p.A.dim, f.member("rB"));
        return p;
    }
    if (std::holds_alternative<BiHomAlgebra>(A)) {
        BiHomMatchedPair p;
        p.A = std::get<BiHomAlgebra>(A);
        p.B = std::get<BiHomAlgebra>(B);
        p.lA = read_family(f.require("lA"), p.A.dim, p.B.dim, f.member("lA"));
        p.rA = read_family(f.require("rA"), p.A.dim, p.B.dim, f.member("rA"));
        p.lB = read_family(f.require("lB"), p.B.dim, p.A.dim, f.member("lB"));
        p.rB = read_family(f.require("rB"), p.B.dim, p.A.dim, f.member("rB"));
        return p;
    }
    if (std::holds_alternative<HomDendriform>(A)) {
        HomDendriformMatchedPair p;
        p.A = std::get<HomDendriform>(A);
        p.B = std::get<HomDendriform>(B);
        const int na = p.A.dim, nb = p.B.dim;
        p.lsuccA = read_family(f.require("lsuccA"), na, nb, f.member("lsuccA"));
        p.rsuccA = read_family(f.require("rsuccA"), na, nb, f.member("rsuccA"));
        p.lprecA = read_family(f.require("lprecA"), na, nb, f.member("lprecA"));
        p.rprecA = read_family(f.require("rprecA"), na, nb, f.member("rprecA"));
        p.lsuccB = read_family(f.require("lsuccB"), nb, na, f.member("lsuccB"));
        p.rsuccB = read_family(f.require("rsuccB"), nb, na, f.member("rsuccB"));
        p.lprecB = read_family(f.require("lprecB"), nb, na, f.member("lprecB"));
        p.rprecB = read_family(f.require("rprecB"), nb, na, f.member("rprecB"));
        return p;
    }
    BiHomDendriformMatchedPair p;
    p.A = std::get<BiHomDendriform>(A);
    p.B = std::get<BiHomDendriform>(B);
    const int na = p.A.dim, nb = p.B.dim;
    p.lsuccA = read_family(f.require("lsuccA"), na, nb, f.member("lsuccA"));
    p.rsuccA = read_family(f.require("rsuccA"), na, nb, f.member("rsuccA"));
    p.lprecA = read_family(f.require("lprecA"), na, nb, f.member("lprecA"));
    p.rprecA = read_family(f.require("rprecA"), na, nb, f.member("rprecA"));
    p.lsuccB = read_family(f.require("lsuccB"), nb, na, f.member("lsuccB"));
    p.rsuccB = read_family(f.require("rsuccB"), nb, na, f.member("rsuccB"));
    p.lprecB = read_family(f.require("lprecB"), nb, na, f.member("lprecB"));
    p.rprecB = read_family(f.require("rprecB"), nb, na, f.member("rprecB"));
    return p;
}

DocPayload read_bialgebra_payload(Fields& f) {
    const json* alg = f.find("algebra");
    const json* dend = f.find("dendriform");
    if (alg && dend)
        fail(f.path(), "bialgebra data carries both an algebra and a dendriform block");
    if (!alg && !dend) fail(f.path(), "missing field \"algebra\"");
    if (alg) {
        const AlgLike a = read_alg_like(*alg, f.member("algebra"));
        if (std::holds_alternative<HomAlgebra>(a)) {
            HomBialgebraData d;
            d.algebra = std::get<HomAlgebra>(a);
            d.coprod = read_coprod(f.require("coprod"), d.algebra.dim, f.member("coprod"));
            return d;
        }
        if (std::holds_alternative<BiHomAlgebra>(a)) {
            BiHomBialgebraData d;
            d.algebra = std::get<BiHomAlgebra>(a);
            d.coprod = read_coprod(f.require("coprod"), d.algebra.dim, f.member("coprod"));
            return d;
        }
        fail(f.member("algebra") + ".kind",
             "expected an associative kind (hom_algebra or bihom_algebra)");
    }
    const AlgLike a = read_alg_like(*dend, f.member("dendriform"));
    if (!std::holds_alternative<HomDendriform>(a))
        fail(f.member("dendriform") + ".kind", "expected kind hom_dendriform");
    DendriformBialgebraData d;
    d.dendriform = std::get<HomDendriform>(a);
    d.coprod_succ =
        read_coprod(f.require("coprod_succ"), d.dendriform.dim, f.member("coprod_succ"));
    d.coprod_prec =
        read_coprod(f.require("coprod_prec"), d.dendriform.dim, f.member("coprod_prec"));
    return d;
}

DocPayload read_form_payload(Fields& f) {
    const AlgLike a = read_alg_like(f.require("algebra"), f.member("algebra"));
    if (std::holds_alternative<HomAlgebra>(a)) {
        HomBilinearForm form;
        form.algebra = std::get<HomAlgebra>(a);
        form.gram =
            read_mat(f.require("gram"), form.algebra.dim, form.algebra.dim, f.member("gram"));
        return form;
    }
    if (std::holds_alternative<BiHomAlgebra>(a)) {
        BiHomForm form;
        form.algebra = std::get<BiHomAlgebra>(a);
        form.gram =
            read_mat(f.require("gram"), form.algebra.dim, form.algebra.dim, f.member("gram"));
        return form;
    }
    fail(f.member("algebra") + ".kind",
         "expected an associative kind (hom_algebra or bihom_algebra)");
}

DocPayload read_operator_payload(Fields& f) {
    OperatorData op;
    const json* alg = f.find("algebra");
    const json* bim = f.find("bimodule");
    if (alg && bim) fail(f.path(), "operator document carries both an algebra and a bimodule");
    if (alg) {
        const AlgLike a = read_alg_like(*alg, f.member("algebra"));
        if (std::holds_alternative<HomAlgebra>(a)) {
            op.algebra = std::get<HomAlgebra>(a);
        } else if (std::holds_alternative<BiHomAlgebra>(a)) {
            op.algebra = std::get<BiHomAlgebra>(a);
        } else {
            fail(f.member("algebra") + ".kind",
                 "expected an associative kind (hom_algebra or bihom_algebra)");
        }
        const int n = std::holds_alternative<HomAlgebra>(a) ? std::get<HomAlgebra>(a).dim
                                                            : std::get<BiHomAlgebra>(a).dim;
        op.map = read_mat(f.require("map"), n, n, f.member("map"));
        return op;
    }
    if (bim) {
        Fields bf(*bim, f.member("bimodule"));
        const DocPayload payload = read_bimodule_payload(bf);
        bf.finish();
        if (std::holds_alternative<HomBimodule>(payload)) {
            const auto& b = std::get<HomBimodule>(payload);
            op.bimodule = b;
            op.map = read_mat(f.require("map"), b.algebra.dim, b.dim_v, f.member("map"));
        } else if (std::holds_alternative<BiHomBimodule>(payload)) {
            const auto& b = std::get<BiHomBimodule>(payload);
            op.bimodule = b;
            op.map = read_mat(f.require("map"), b.algebra.dim, b.dim_v, f.member("map"));
        } else {
            fail(f.member("bimodule") + ".algebra.kind",
                 "expected an associative kind (hom_algebra or bihom_algebra)");
        }
        return op;
    }
    op.map = read_free_mat(f.require("map"), f.member("map"));
    return op;
}

// -- serialization ---------------------------------------------------------

using detail::scalar_json;

json mat_json(const Mat& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(scalar_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json mult_json(const MultTensor& m) {
    json entries = json::array();
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j)
            for (int k = 0; k < m.dim; ++k)
                if (m.at(i, j, k) != 0)
                    entries.push_back(json::array(
                        {i + 1, j + 1, k + 1, scalar_json(m.at(i, j, k))}));
    return entries;
}

json coprod_json(const CoprodTensor& cp) {
    json entries = json::array();
    for (int k = 0; k < cp.dim; ++k)
        for (int u = 0; u < cp.dim; ++u)
            for (int t = 0; t < cp.dim; ++t)
                if (cp.at(k, u, t) != 0)
                    entries.push_back(json::array(
                        {k + 1, u + 1, t + 1, scalar_json(cp.at(k, u, t))}));
    return entries;
}

json family_json(const ActionFamily& fam) {
    json mats = json::array();
    for (const Mat& m : fam) mats.push_back(mat_json(m));
    return mats;
}

json alg_like_json(const HomAlgebra& a) {
    json j;
    j["kind"] = "hom_algebra";
    j["dim"] = a.dim;
    j["mult"] = mult_json(a.mult);
    j["alpha"] = mat_json(a.alpha);
    return j;
}

json alg_like_json(const BiHomAlgebra& a) {
    json j;
    j["kind"] = "bihom_algebra";
    j["dim"] = a.dim;
    j["mult"] = mult_json(a.mult);
    j["alpha1"] = mat_json(a.alpha1);
    j["alpha2"] = mat_json(a.alpha2);
    return j;
}

json alg_like_json(const HomDendriform& d) {
    json j;
    j["kind"] = "hom_dendriform";
    j["dim"] = d.dim;
    j["prec"] = mult_json(d.prec);
    j["succ"] = mult_json(d.succ);
    j["alpha"] = mat_json(d.alpha);
    return j;
}

json alg_like_json(const BiHomDendriform& d) {
    json j;
    j["kind"] = "bihom_dendriform";
    j["dim"] = d.dim;
    j["prec"] = mult_json(d.prec);
    j["succ"] = mult_json(d.succ);
    j["alpha"] = mat_json(d.alpha);
    j["beta"] = mat_json(d.beta);
    return j;
}

// Payload fields for the top level (no "kind"; the document adds it).
void strip_kind(json& j) { j.erase("kind"); }

struct PayloadWriter {
    json out;

    void operator()(const HomAlgebra& a) {
        out = alg_like_json(a);
        strip_kind(out);
    }
    void operator()(const BiHomAlgebra& a) {
        out = alg_like_json(a);
        strip_kind(out);
    }
    void operator()(const HomDendriform& d) {
        out = alg_like_json(d);
        strip_kind(out);
    }
    void operator()(const BiHomDendriform& d) {
        out = alg_like_json(d);
        strip_kind(out);
    }
    void operator()(const HomBimodule& b) {
        out["algebra"] = alg_like_json(b.algebra);
        out["dim_v"] = b.dim_v;
        out["l"] = family_json(b.l);
        out["r"] = family_json(b.r);
        out["beta"] = mat_json(b.beta);
    }
    void operator()(const BiHomBimodule& b) {
        out["algebra"] = alg_like_json(b.algebra);
        out["dim_v"] = b.dim_v;
        out["l"] = family_json(b.l);
        out["r"] = family_json(b.r);
        out["beta1"] = mat_json(b.beta1);
        out["beta2"] = mat_json(b.beta2);
    }
    void operator()(const HomDendriformBimodule& b) {
        out["algebra"] = alg_like_json(b.algebra);
        out["dim_v"] = b.dim_v;
        out["lsucc"] = family_json(b.lsucc);
        out["rsucc"] = family_json(b.rsucc);
        out["lprec"] = family_json(b.lprec);
        out["rprec"] = family_json(b.rprec);
        out["beta"] = mat_json(b.beta);
    }
    void operator()(const BiHomDendriformBimodule& b) {
        out["algebra"] = alg_like_json(b.algebra);
        out["dim_v"] = b.dim_v;
        out["lsucc"] = family_json(b.lsucc);
        out["rsucc"] = family_json(b.rsucc);
        out["lprec"] = family_json(b.lprec);
        out["rprec"] = family_json(b.rprec);
        out["beta1"] = mat_json(b.beta1);
        out["beta2"] = mat_json(b.beta2);
    }
    void operator()(const HomMatchedPair& p) {
        out["A"] = alg_like_json(p.A);
        out["B"] = alg_like_json(p.B);
        out["lA"] = family_json(p.lA);
        out["rA"] = family_json(p.rA);
        out["lB"] = family_json(p.lB);
        out["rB"] = family_json(p.rB);
    }
    void operator()(const BiHomMatchedPair& p) {
        out["A"] = alg_like_json(p.A);
        out["B"] = alg_like_json(p.B);
        out["lA"] = family_json(p.lA);
        out["rA"] = family_json(p.rA);
        out["lB"] = family_json(p.lB);
        out["rB"] = family_json(p.rB);
    }
    void operator()(const HomDendriformMatchedPair& p) {
        out["A"] = alg_like_json(p.A);
        out["B"] = alg_like_json(p.B);
        out["lsuccA"] = family_json(p.lsuccA);
        out["rsuccA"] = family_json(p.rsuccA);
        out["lprecA"] = family_json(p.lprecA);
        out["rprecA"] = family_json(p.rprecA);
        out["lsuccB"] = family_json(p.lsuccB);
        out["rsuccB"] = family_json(p.rsuccB);
        out["lprecB"] = family_json(p.lprecB);
        out["rprecB"] = family_json(p.rprecB);
    }
    void operator()(const BiHomDendriformMatchedPair& p) {
        out["A"] = alg_like_json(p.A);
        out["B"] = alg_like_json(p.B);
        out["lsuccA"] = family_json(p.lsuccA);
        out["rsuccA"] = family_json(p.rsuccA);
        out["lprecA"] = family_json(p.lprecA);
        out["rprecA"] = family_json(p.rprecA);
        out["lsuccB"] = family_json(p.lsuccB);
        out["rsuccB"] = family_json(p.rsuccB);
        out["lprecB"] = family_json(p.lprecB);
        out["rprecB"] = family_json(p.rprecB);
    }
    void operator()(const HomBialgebraData& d) {
        out["algebra"] = alg_like_json(d.algebra);
        out["coprod"] = coprod_json(d.coprod);
    }
    void operator()(const BiHomBialgebraData& d) {
        out["algebra"] = alg_like_json(d.algebra);
        out["coprod"] = coprod_json(d.coprod);
    }
    void operator()(const DendriformBialgebraData& d) {
        out["dendriform"] = alg_like_json(d.dendriform);
        out["coprod_succ"] = coprod_json(d.coprod_succ);
        out["coprod_prec"] = coprod_json(d.coprod_prec);
    }
    void operator()(const HomBilinearForm& form) {
        out["algebra"] = alg_like_json(form.algebra);
        out["gram"] = mat_json(form.gram);
    }
    void operator()(const BiHomForm& form) {
        out["algebra"] = alg_like_json(form.algebra);
        out["gram"] = mat_json(form.gram);
    }
    void operator()(const OperatorData& op) {
        out["map"] = mat_json(op.map);
        if (op.algebra) {
            if (std::holds_alternative<HomAlgebra>(*op.algebra))
                out["algebra"] = alg_like_json(std::get<HomAlgebra>(*op.algebra));
            else
                out["algebra"] = alg_like_json(std::get<BiHomAlgebra>(*op.algebra));
        }
        if (op.bimodule) {
            PayloadWriter inner;
            if (std::holds_alternative<HomBimodule>(*op.bimodule))
                inner(std::get<HomBimodule>(*op.bimodule));
            else
                inner(std::get<BiHomBimodule>(*op.bimodule));
            out["bimodule"] = std::move(inner.out);
        }
    }
};

} // namespace

const char* kind_name(DocKind k) {
    for (const auto& [kind, name] : kKindNames)
        if (kind == k) return name;
    return "unknown";
}

std::optional<DocKind> kind_from_name(const std::string& name) {
    for (const auto& [kind, text] : kKindNames)
        if (name == text) return kind;
    return std::nullopt;
}

int max_document_dim() {
    if (const char* env = std::getenv("WORKBENCH_MAX_DIM")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return 16;
}

WorkbenchDocument parse_document_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        std::string msg = e.what();
        const auto pos = msg.find("] ");
        if (pos != std::string::npos) msg = msg.substr(pos + 2);
        throw DocumentError("$", msg);
    }
    Fields f(j, "$");
    WorkbenchDocument doc;
    doc.kind = read_kind_field(f);
    if (const json* name = f.find("name")) {
        if (!name->is_string()) fail(f.member("name"), "expected a string");
        doc.name = name->get<std::string>();
    }
    if (const json* desc = f.find("description")) {
        if (!desc->is_string()) fail(f.member("description"), "expected a string");
        doc.description = desc->get<std::string>();
    }
    switch (doc.kind) {
    case DocKind::hom_algebra: doc.payload = read_hom_algebra(f); break;
    case DocKind::bihom_algebra: doc.payload = read_bihom_algebra(f); break;
    case DocKind::hom_dendriform: doc.payload = read_hom_dendriform(f); break;
    case DocKind::bihom_dendriform: doc.payload = read_bihom_dendriform(f); break;
    case DocKind::bimodule: doc.payload = read_bimodule_payload(f); break;
    case DocKind::matched_pair: doc.payload = read_matched_pair_payload(f); break;
    case DocKind::bialgebra_data: doc.payload = read_bialgebra_payload(f); break;
    case DocKind::form: doc.payload = read_form_payload(f); break;
    case DocKind::op: doc.payload = read_operator_payload(f); break;
    }
    f.finish();
    return doc;
}

WorkbenchDocument parse_document_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("$", "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document_text(buf.str());
}

std::string serialize_document(const WorkbenchDocument& doc) {
    PayloadWriter writer;
    std::visit(writer, doc.payload);
    json j = std::move(writer.out);
    j["kind"] = kind_name(doc.kind);
    if (!doc.name.empty()) j["name"] = doc.name;
    if (!doc.description.empty()) j["description"] = doc.description;
    return detail::dump_canonical(j);
}

int document_dim(const WorkbenchDocument& doc) {
    return std::visit(
        [](const auto& payload) -> int {
            using T = std::decay_t<decltype(payload)>;
            if constexpr (std::is_same_v<T, HomAlgebra> || std::is_same_v<T, BiHomAlgebra> ||
                          std::is_same_v<T, HomDendriform> || std::is_same_v<T, BiHomDendriform>) {
                return payload.dim;
            } else if constexpr (std::is_same_v<T, HomBimodule> ||
                                 std::is_same_v<T, BiHomBimodule> ||
                                 std::is_same_v<T, HomDendriformBimodule> ||
                                 std::is_same_v<T, BiHomDendriformBimodule>) {
                return payload.algebra.dim;
            } else if constexpr (std::is_same_v<T, HomMatchedPair> ||
                                 std::is_same_v<T, BiHomMatchedPair> ||
                                 std::is_same_v<T, HomDendriformMatchedPair> ||
                                 std::is_same_v<T, BiHomDendriformMatchedPair>) {
                return payload.A.dim + payload.B.dim;
            } else if constexpr (std::is_same_v<T, HomBialgebraData> ||
                                 std::is_same_v<T, BiHomBialgebraData>) {
                return payload.algebra.dim;
            } else if constexpr (std::is_same_v<T, DendriformBialgebraData>) {
                return payload.dendriform.dim;
            } else if constexpr (std::is_same_v<T, HomBilinearForm> ||
                                 std::is_same_v<T, BiHomForm>) {
                return payload.algebra.dim;
            } else {
                return payload.map.rows;
            }
        },
        doc.payload);
}

} // namespace wb
