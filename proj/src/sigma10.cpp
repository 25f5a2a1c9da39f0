#include "mfb/sigma10.hpp"
#include "mfb/errors.hpp"

#include <algorithm>
#include <sstream>

namespace mfb {

Sigma10Germ Sigma10Germ::create(BivarPoly d, FieldPtr field) {
    if (d.is_zero()) throw Error("sigma10: d = 0");
    for (auto& [k, c] : d.terms())
        if (k.second % 2 != 0)
            throw Unsupported("sigma10: d must have the shape g(s, t^2), found odd t-exponent");
    if (d.divisible_by_t()) throw Unsupported("sigma10: d must not be divisible by t");
    if (!squarefree_check(d))
        throw Unsupported("sigma10: d has a repeated factor (double point curve not reduced)");
    return Sigma10Germ{std::move(d), std::move(field)};
}

std::string image_equation(const Sigma10Germ& germ) {
    // g(x, y) = d with s -> x, t^2 -> y; f = y g^2 - z^2
    std::map<BivarPoly::Key, NFElem> gterms;
    for (auto& [k, c] : germ.d.terms()) gterms[{k.first, k.second / 2}] = c;
    BivarPoly g(std::move(gterms));
    BivarPoly yg2 = BivarPoly::monomial(NFElem(1), 0, 1) * g * g; // y g(x,y)^2
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : yg2.terms()) {
        NFElem coef = c;
        std::string sign = " + ";
        if (coef.is_rational() && coef.rational_value() < 0) {
            sign = " - ";
            coef = -coef;
        }
        if (!first) os << sign;
        else if (sign == " - ") os << "-";
        first = false;
        bool unit_coeff = coef == NFElem(1) && (k.first > 0 || k.second > 0);
        if (!unit_coeff) os << (coef.is_rational() ? coef.rational_value().get_str() : "(" + coef.str() + ")");
        bool need_star = !unit_coeff;
        if (k.first > 0) {
            if (need_star) os << "*";
            os << "x";
            if (k.first > 1) os << "^" << k.first;
            need_star = true;
        }
        if (k.second > 0) {
            if (need_star) os << "*";
            os << "y";
            if (k.second > 1) os << "^" << k.second;
        }
    }
    os << " - z^2";
    return os.str();
}

std::vector<int> pairing(BranchSet& bs) {
    std::size_t l = bs.branches.size();
    std::vector<int> sigma(l, -1);
    long extra = 0;
    while (true) {
        bool ambiguous = false;
        for (std::size_t i = 0; i < l; ++i) {
            Branch ib = apply_involution(bs.branches[i]);
            std::vector<int> matches;
            for (std::size_t k = 0; k < l; ++k)
                if (branches_equal(ib, bs.branches[k])) matches.push_back(static_cast<int>(k));
            if (matches.empty())
                throw PairingFailure("involution image of branch " + std::to_string(i + 1) +
                                     " is not in the branch set");
            if (matches.size() > 1) {
                ambiguous = true;
                break;
            }
            sigma[i] = matches[0];
        }
        if (!ambiguous) break;
        // distinct branches agree only up to finite contact: extend and retry
        extra = std::max<long>(extra * 2, 64);
        if (extra > Branch::TRUNCATION_CAP) throw PairingFailure("truncation exhausted");
        for (auto& b : bs.branches) b.ensure_prec(extra);
    }
    for (std::size_t i = 0; i < l; ++i)
        if (sigma[static_cast<std::size_t>(sigma[i])] != static_cast<int>(i))
            throw PairingFailure("pairing is not an involution");
    return sigma;
}

long lambda(BranchSet& bs, std::size_t i) {
    long sum = 0;
    for (std::size_t k = 0; k < bs.branches.size(); ++k) {
        if (k == i) continue;
        sum += intersection_multiplicity(bs.branches[i], bs.branches[k]);
    }
    BivarPoly t_axis = BivarPoly::variable_t(); // D_sharp for H = z
    sum += intersection_multiplicity(bs.branches[i], t_axis);
    return -sum;
}

long crosscap_count(const Sigma10Germ& germ) {
    NFPoly d0 = germ.d.at_t_zero();
    if (d0.is_zero()) throw InfiniteOrder("d(s, 0) = 0");
    for (std::size_t k = 0; k < d0.coeffs().size(); ++k)
        if (!d0.coeffs()[k].is_zero()) return static_cast<long>(k);
    throw InfiniteOrder("d(s, 0) = 0");
}

namespace {

struct PipelineCore {
    ExpandResult expansion;
    std::vector<int> sigma;
    std::vector<long> lambdas;
};

PipelineCore run_core(const Sigma10Germ& germ, std::optional<BranchSet> override_branches = {}) {
    PipelineCore core;
    try {
        if (override_branches) {
            // user-supplied parametrizations: validate against d, skip expansion
            BivarPoly dm = germ.d;
            for (auto& b : override_branches->branches) {
                Branch copy = b;
                Series sub = dm.substitute(copy.s(), copy.t());
                if (!sub.terms().empty())
                    throw Error("supplied branch does not lie on d: " + copy.str());
            }
            for (std::size_t i = 0; i < override_branches->branches.size(); ++i)
                for (std::size_t j = i + 1; j < override_branches->branches.size(); ++j)
                    if (branches_equal(override_branches->branches[i],
                                       override_branches->branches[j]))
                        throw Error("supplied branches are not pairwise distinct");
            core.expansion.field = override_branches->field;
            core.expansion.embedding = FieldEmbedding{germ.field, override_branches->field,
                                                      override_branches->field->generator()};
            core.expansion.branches = std::move(*override_branches);
        } else {
            core.expansion = expand(germ.d, germ.field, 24);
        }
    } catch (Error& e) {
        throw StageError("expand", e.what());
    }
    try {
        core.sigma = pairing(core.expansion.branches);
    } catch (Error& e) {
        throw StageError("pairing", e.what());
    }
    try {
        for (std::size_t i = 0; i < core.expansion.branches.branches.size(); ++i)
            core.lambdas.push_back(lambda(core.expansion.branches, i));
    } catch (Error& e) {
        throw StageError("lambda", e.what());
    }
    return core;
}

PairingData pairing_data_from(const std::vector<int>& sigma, const std::vector<long>& lambdas) {
    PairingData pd;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        std::size_t j = static_cast<std::size_t>(sigma[i]);
        if (j < i) continue; // orbit already emitted
        PairData p;
        p.i = static_cast<int>(i) + 1;
        p.sigma_i = static_cast<int>(j) + 1;
        p.v = 0; // H = z for sigma^{1,0} germs
        if (i == j)
            p.lambda = {lambdas[i]};
        else
            p.lambda = {lambdas[i], lambdas[j]};
        pd.pairs.push_back(std::move(p));
    }
    return pd;
}

} // namespace

Sigma10Result compute_boundary_with_branches_impl(const Sigma10Germ& germ,
                                                  std::optional<BranchSet> branches);

SumIdentityReport verify_sum_identity(const Sigma10Germ& germ) {
    PipelineCore core = run_core(germ);
    PairingData pd = pairing_data_from(core.sigma, core.lambdas);
    SumIdentityReport rep;
    for (auto& p : pd.pairs) rep.lhs += vertical_index(p);
    long pairwise = 0;
    auto& branches = core.expansion.branches.branches;
    for (std::size_t i = 0; i < branches.size(); ++i)
        for (std::size_t k = 0; k < branches.size(); ++k) {
            if (i == k) continue;
            pairwise += intersection_multiplicity(branches[i], branches[k]);
        }
    rep.rhs = -pairwise - crosscap_count(germ);
    rep.holds = rep.lhs == rep.rhs;
    return rep;
}

Sigma10Result compute_boundary(const Sigma10Germ& germ) {
    return compute_boundary_with_branches_impl(germ, std::nullopt);
}

Sigma10Result compute_boundary_with_branches(const Sigma10Germ& germ, BranchSet branches) {
    return compute_boundary_with_branches_impl(germ, std::move(branches));
}

Sigma10Result compute_boundary_with_branches_impl(const Sigma10Germ& germ,
                                                  std::optional<BranchSet> branches) {
    Sigma10Result res;
    PipelineCore core = run_core(germ, std::move(branches));
    res.field = core.expansion.field;
    res.branches = core.expansion.branches;
    res.sigma = core.sigma;
    res.lambdas = core.lambdas;
    try {
        res.graph = resolve(res.branches);
    } catch (Error& e) {
        throw StageError("resolve", e.what());
    }
    res.pairing_data = pairing_data_from(res.sigma, res.lambdas);
    try {
        res.boundary = build_boundary_graph(res.graph, res.pairing_data);
    } catch (Error& e) {
        throw StageError("boundary", e.what());
    }
    try {
        res.crosscaps = crosscap_count(germ);
        res.identity.lhs = 0;
        for (auto& p : res.pairing_data.pairs) res.identity.lhs += vertical_index(p);
        long pairwise = 0;
        IMat pw = pairwise_intersections_from_graph(res.graph);
        for (std::size_t i = 0; i < res.branches.branches.size(); ++i)
            for (std::size_t k = 0; k < res.branches.branches.size(); ++k)
                if (i != k) pairwise += to_long(pw.at(i, k));
        res.identity.rhs = -pairwise - res.crosscaps;
        res.identity.holds = res.identity.lhs == res.identity.rhs;
        if (!res.identity.holds)
            throw Error("vertical index sum identity failed: " + std::to_string(res.identity.lhs) +
                        " vs " + std::to_string(res.identity.rhs));
    } catch (StageError&) {
        throw;
    } catch (Error& e) {
        throw StageError("sum-identity", e.what());
    }
    return res;
}

} // namespace mfb
