#include "orbitgeo/metric.hpp"

#include "json.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace orbitgeo {

DiagonalMetric::DiagonalMetric(int n_, Vector mu_) : n(n_), mu(std::move(mu_)) {
    if (mu.size() != basis_dim(n)) throw std::invalid_argument("metric weight length does not match n(n-1)/2");
    for (int k = 0; k < mu.size(); ++k)
        if (!(mu[k] > 0.0)) throw std::invalid_argument("metric weights must be positive");
}

double DiagonalMetric::mu_at(int i, int j) const { return mu[basis_index(n, i, j)]; }
double& DiagonalMetric::mu_at(int i, int j) { return mu[basis_index(n, i, j)]; }

DiagonalMetric equal_metric(int n, double mu) {
    if (!(mu > 0.0)) throw std::invalid_argument("metric weights must be positive");
    return DiagonalMetric(n, Vector::Constant(basis_dim(n), mu));
}

namespace {

void require_same(const DiagonalMetric& g, const AlgebraVector& x) {
    if (g.n != x.n) throw std::invalid_argument("metric and vector dimension mismatch");
}

}  // namespace

double metric_eval(const DiagonalMetric& g, const AlgebraVector& x, const AlgebraVector& y) {
    require_same(g, x);
    require_same(g, y);
    return (g.mu.array() * x.c.array() * y.c.array()).sum();
}

Vector metric_to_P(const DiagonalMetric& g) {
    if (g.n == 2)
        throw std::domain_error("the quadratic form Q vanishes identically on so(2); P is undefined");
    return g.mu / (2.0 * (g.n - 2));
}

AlgebraVector u_operator(const DiagonalMetric& g, const AlgebraVector& x, const AlgebraVector& y) {
    require_same(g, x);
    require_same(g, y);
    int n = g.n;
    Matrix xm = vector_to_skew(x);
    Matrix ym = vector_to_skew(y);
    AlgebraVector u = AlgebraVector::zero(n);
    for (int k = 0; k < basis_dim(n); ++k) {
        auto [r, s] = basis_pair(n, k);
        Matrix wm = basis_element(n, r, s);
        double t1 = metric_eval(g, skew_to_vector(bracket(wm, xm)), y);
        double t2 = metric_eval(g, skew_to_vector(bracket(wm, ym)), x);
        u.c[k] = (t1 + t2) / (2.0 * g.mu[k]);
    }
    return u;
}

AlgebraVector nabla_origin(const DiagonalMetric& g, const AlgebraVector& x, const AlgebraVector& y) {
    AlgebraVector lie = skew_to_vector(bracket(vector_to_skew(x), vector_to_skew(y)));
    return -0.5 * lie + u_operator(g, x, y);
}

AlgebraVector nabla_left(const DiagonalMetric& g, const AlgebraVector& x, const AlgebraVector& y) {
    AlgebraVector lie = skew_to_vector(bracket(vector_to_skew(x), vector_to_skew(y)));
    return 0.5 * lie + u_operator(g, x, y);
}

Matrix nabla_left_matrix(const DiagonalMetric& g, const AlgebraVector& x) {
    require_same(g, x);
    int d = basis_dim(g.n);
    Matrix m(d, d);
    for (int k = 0; k < d; ++k) {
        auto [r, s] = basis_pair(g.n, k);
        m.col(k) = nabla_left(g, x, AlgebraVector::basis(g.n, r, s)).c;
    }
    return m;
}

AlgebraVector curvature_origin(const DiagonalMetric& g, const AlgebraVector& x, const AlgebraVector& y,
                               const AlgebraVector& z) {
    AlgebraVector xy = skew_to_vector(bracket(vector_to_skew(x), vector_to_skew(y)));
    AlgebraVector a = nabla_left(g, x, nabla_left(g, y, z));
    AlgebraVector b = nabla_left(g, y, nabla_left(g, x, z));
    AlgebraVector c = nabla_left(g, xy, z);
    return a - b - c;
}

double sectional_curvature(const DiagonalMetric& g, const AlgebraVector& x, const AlgebraVector& y) {
    double xx = metric_eval(g, x, x);
    double yy = metric_eval(g, y, y);
    double xy = metric_eval(g, x, y);
    double denom = xx * yy - xy * xy;
    if (denom < 1e-14) throw std::domain_error("sectional curvature of a degenerate plane");
    return metric_eval(g, curvature_origin(g, x, y, y), x) / denom;
}

DiagonalMetric metric_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("metric JSON parse failure: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("metric JSON must be an object with an integer field \"n\"");
    int n = j["n"].get<int>();
    if (n < 2) throw std::invalid_argument("metric dimension must be at least 2");
    Vector mu = Vector::Constant(basis_dim(n), 1.0);
    if (j.contains("mu")) {
        const auto& entries = j["mu"];
        if (!entries.is_object()) throw std::invalid_argument("metric field \"mu\" must be an object");
        for (auto it = entries.begin(); it != entries.end(); ++it) {
            const std::string& key = it.key();
            auto comma = key.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("metric key \"" + key + "\" is not of the form \"i,j\"");
            int i = 0, jj = 0;
            try {
                i = std::stoi(key.substr(0, comma));
                jj = std::stoi(key.substr(comma + 1));
            } catch (const std::exception&) {
                throw std::invalid_argument("metric key \"" + key + "\" is not of the form \"i,j\"");
            }
            require_basis_index(n, i, jj);
            if (!it.value().is_number()) throw std::invalid_argument("metric value for \"" + key + "\" must be a number");
            double v = it.value().get<double>();
            if (!(v > 0.0)) throw std::invalid_argument("metric value for \"" + key + "\" must be positive");
            mu[basis_index(n, i, jj)] = v;
        }
    }
    return DiagonalMetric(n, std::move(mu));
}

std::string metric_to_json(const DiagonalMetric& g, int indent) {
    nlohmann::json j;
    j["n"] = g.n;
    nlohmann::json entries = nlohmann::json::object();
    for (int k = 0; k < basis_dim(g.n); ++k) {
        auto [i, jj] = basis_pair(g.n, k);
        entries[std::to_string(i) + "," + std::to_string(jj)] = g.mu[k];
    }
    j["mu"] = entries;
    return j.dump(indent);
}

}  // namespace orbitgeo
