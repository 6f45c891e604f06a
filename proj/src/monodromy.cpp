#include "strata/monodromy.hpp"

#include "strata/errors.hpp"

namespace strata {

Generator parse_generator(const Fixture& f, const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw DomainError(DomainError::Code::UnknownGenerator,
                          "generator must look like edge:<id> or level:<integer>");
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    Generator g;
    if (kind == "edge") {
        if (!f.graph.has_edge(rest) || !f.graph.horizontal(f.graph.edge(rest)))
            throw DomainError(DomainError::Code::UnknownGenerator,
                              "'" + rest + "' is not a horizontal edge");
        g.kind = Generator::Kind::HorizontalEdge;
        g.edge = rest;
        return g;
    }
    if (kind == "level") {
        size_t pos = 0;
        long level = 0;
        try {
            level = std::stol(rest, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != rest.size() || rest.empty())
            throw DomainError(DomainError::Code::UnknownGenerator,
                              "'" + rest + "' is not an integer level");
        if (level >= 0 || level < f.graph.min_level())
            throw DomainError(DomainError::Code::UnknownGenerator,
                              "level " + rest + " has no twist generator");
        g.kind = Generator::Kind::Level;
        g.level = level;
        return g;
    }
    throw DomainError(DomainError::Code::UnknownGenerator,
                      "unknown generator kind '" + kind + "'");
}

std::string to_string(const Generator& g) {
    if (g.kind == Generator::Kind::HorizontalEdge) return "edge:" + g.edge;
    return "level:" + std::to_string(g.level);
}

std::vector<Generator> all_generators(const Fixture& f) {
    std::vector<Generator> out;
    for (const Edge& e : f.graph.edges())
        if (f.graph.horizontal(e))
            out.push_back({Generator::Kind::HorizontalEdge, e.id, 0});
    for (long i : f.graph.levels())
        if (i < 0) out.push_back({Generator::Kind::Level, "", i});
    return out;
}

namespace {

// The twisted part of the matrix: columns gain m * <cycle, lambda> * lambda
// for each participating edge.
void add_twist_terms(const Fixture& f, Mat& m, const std::string& edge_id, long weight,
                     int sign) {
    size_t n = f.model.dim();
    Vec lambda = f.model.lambda(edge_id);
    for (size_t l = 0; l < n; ++l) {
        long pair = f.model.pairing(f.model.cycles[l].id, edge_id);
        if (pair == 0) continue;
        Scalar c = Scalar(Rational(sign * weight * pair));
        for (size_t j = 0; j < n; ++j) m.at(j, l) += c * lambda[j];
    }
}

void apply_generator(const Fixture& f, Mat& m, const Generator& gen, int sign) {
    if (gen.kind == Generator::Kind::HorizontalEdge) {
        add_twist_terms(f, m, gen.edge, 1, sign);
        return;
    }
    ProngData pd = prong_data(f.graph, gen.level);
    for (const auto& [edge_id, weight] : pd.m) add_twist_terms(f, m, edge_id, weight, sign);
}

void assert_square_zero(const Mat& n, const std::string& what) {
    Mat sq = mul(n, n);
    for (size_t i = 0; i < sq.rows(); ++i)
        for (size_t j = 0; j < sq.cols(); ++j)
            if (!sq.at(i, j).is_zero())
                throw DomainError(DomainError::Code::BrokenInvariant,
                                  what + " is not square-zero");
}

} // namespace

Mat twist_matrix(const Fixture& f, const Generator& gen) {
    Mat m = Mat::identity(f.model.dim());
    apply_generator(f, m, gen, 1);
    return m;
}

Mat monodromy_log(const Fixture& f, const Generator& gen) {
    Mat m(f.model.dim(), f.model.dim());
    apply_generator(f, m, gen, -1);
    assert_square_zero(m, "log of " + to_string(gen));
    return m;
}

long derived_sigma(const Fixture& f, const Edge& e, const SigmaSpec& sigma) {
    if (f.graph.horizontal(e)) {
        auto it = sigma.edges.find(e.id);
        if (it == sigma.edges.end())
            throw DomainError(DomainError::Code::BadWeight,
                              "no weight for horizontal edge '" + e.id + "'");
        return it->second;
    }
    long total = 0;
    for (long k = f.graph.level_minus(e); k <= f.graph.level_plus(e) - 1; ++k) {
        auto it = sigma.levels.find(k);
        if (it == sigma.levels.end())
            throw DomainError(DomainError::Code::BadWeight,
                              "no weight for level " + std::to_string(k));
        total += prong_data(f.graph, k).m.at(e.id) * it->second;
    }
    return total;
}

Mat arc_log(const Fixture& f, const SigmaSpec& sigma) {
    Mat m(f.model.dim(), f.model.dim());
    for (const Generator& gen : all_generators(f)) {
        long weight = 0;
        if (gen.kind == Generator::Kind::HorizontalEdge) {
            auto it = sigma.edges.find(gen.edge);
            if (it == sigma.edges.end())
                throw DomainError(DomainError::Code::BadWeight,
                                  "no weight for horizontal edge '" + gen.edge + "'");
            weight = it->second;
        } else {
            auto it = sigma.levels.find(gen.level);
            if (it == sigma.levels.end())
                throw DomainError(DomainError::Code::BadWeight,
                                  "no weight for level " + std::to_string(gen.level));
            weight = it->second;
        }
        if (weight < 1)
            throw DomainError(DomainError::Code::BadWeight,
                              "weights must be positive integers");
        Mat nk(f.model.dim(), f.model.dim());
        apply_generator(f, nk, gen, -1);
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) += Scalar(Rational(weight)) * nk.at(i, j);
    }
    assert_square_zero(m, "arc log");
    return m;
}

bool preserves(const Mat& A, const Mat& N) {
    if (A.cols() != N.rows())
        throw DomainError(DomainError::Code::DimensionMismatch,
                          "preserves: equation width does not match operator size");
    return rank(vstack(A, mul(A, transpose(N)))) == rank(A);
}

std::vector<ResidueForm> forced_residue_equations(const Fixture& f, const Mat& A,
                                                  const SigmaSpec& sigma) {
    if (A.cols() != f.model.dim())
        throw DomainError(DomainError::Code::DimensionMismatch,
                          "forced_residue_equations: equation width mismatch");
    const std::vector<Edge>& edges = f.graph.edges();

    // Relations among the vanishing classes themselves; any residue form is
    // only meaningful modulo these.
    Mat van(0, f.model.dim());
    for (const Edge& e : edges) van.append_row(f.model.lambda(e.id));
    Rref relations = rref(left_kernel(van));

    std::vector<ResidueForm> out;
    for (size_t k = 0; k < A.rows(); ++k) {
        ResidueForm form;
        form.row = k;
        Vec raw(edges.size());
        for (size_t j = 0; j < edges.size(); ++j) {
            Scalar c;
            for (size_t l = 0; l < f.model.dim(); ++l) {
                if (A.at(k, l).is_zero()) continue;
                long pair = f.model.pairing(f.model.cycles[l].id, edges[j].id);
                if (pair != 0) c += A.at(k, l) * Scalar(Rational(pair));
            }
            if (!c.is_zero()) c *= Scalar(Rational(derived_sigma(f, edges[j], sigma)));
            raw[j] = c;
        }
        Vec reduced = reduce_row_mod(raw, relations);
        for (size_t j = 0; j < edges.size(); ++j) {
            if (!raw[j].is_zero()) form.raw[edges[j].id] = raw[j];
            if (!reduced[j].is_zero()) form.reduced[edges[j].id] = reduced[j];
        }
        form.vacuous = form.reduced.empty();
        out.push_back(std::move(form));
    }
    return out;
}

} // namespace strata
