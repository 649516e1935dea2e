#include "lpgame/lp.hpp"

namespace lpgame {

LPInstance::LPInstance(RMat A_, RVec b_, RVec c_)
    : A(std::move(A_)), b(std::move(b_)), c(std::move(c_))
{
    if (A.rows != static_cast<int>(b.size()) || A.cols != static_cast<int>(c.size()))
        throw std::invalid_argument("LPInstance: dimension mismatch between A, b, c");
}

namespace {

void check_dims(const LPInstance& lp, const RVec& v, int want, const char* name)
{
    if (static_cast<int>(v.size()) != want)
        throw std::invalid_argument(std::string("verify_outcome: ") + name +
                                    " has wrong dimension");
    (void)lp;
}

void check_componentwise(VerifyReport& rep, const RVec& lhs, const RVec& rhs,
                         VecOrder want, const std::string& label)
{
    const VecOrder got = componentwise_cmp(lhs, rhs);
    const bool ok = got == VecOrder::EQ ||
                    (want == VecOrder::LE && got == VecOrder::LE) ||
                    (want == VecOrder::GE && got == VecOrder::GE);
    if (!ok)
        rep.fail(label);
}

}  // namespace

VerifyReport verify_outcome(const LPInstance& lp, const LPOutcome& outcome)
{
    VerifyReport rep;
    if (const auto* opt = std::get_if<OptimalPair>(&outcome)) {
        check_dims(lp, opt->x, lp.n(), "x");
        check_dims(lp, opt->y, lp.m(), "y");
        check_componentwise(rep, mat_vec(lp.A, opt->x), lp.b, VecOrder::LE, "Ax <= b");
        if (!is_nonneg(opt->x))
            rep.fail("x >= 0");
        check_componentwise(rep, vec_mat(opt->y, lp.A), lp.c, VecOrder::GE, "A'y >= c");
        if (!is_nonneg(opt->y))
            rep.fail("y >= 0");
        if (dot(lp.c, opt->x) != opt->value)
            rep.fail("c'x = value");
        if (dot(lp.b, opt->y) != opt->value)
            rep.fail("b'y = value");
    } else if (const auto* inf = std::get_if<InfeasibilityCert>(&outcome)) {
        check_dims(lp, inf->z, lp.m(), "z");
        check_componentwise(rep, vec_mat(inf->z, lp.A), zeros(lp.n()), VecOrder::GE,
                            "A'z >= 0");
        if (!is_nonneg(inf->z))
            rep.fail("z >= 0");
        if (dot(lp.b, inf->z) >= 0)
            rep.fail("b'z < 0");
    } else {
        const auto& unb = std::get<UnboundednessCert>(outcome);
        check_dims(lp, unb.w, lp.n(), "w");
        check_componentwise(rep, mat_vec(lp.A, unb.w), zeros(lp.m()), VecOrder::LE,
                            "Aw <= 0");
        if (!is_nonneg(unb.w))
            rep.fail("w >= 0");
        if (dot(lp.c, unb.w) <= 0)
            rep.fail("c'w > 0");
        if (unb.feasible_witness) {
            check_dims(lp, *unb.feasible_witness, lp.n(), "witness");
            check_componentwise(rep, mat_vec(lp.A, *unb.feasible_witness), lp.b,
                                VecOrder::LE, "A*witness <= b");
            if (!is_nonneg(*unb.feasible_witness))
                rep.fail("witness >= 0");
        }
    }
    return rep;
}

DualCertificate cert_transfer_dual(const LPOutcome& cert, const LPInstance& lp)
{
    if (std::holds_alternative<OptimalPair>(cert))
        throw std::invalid_argument("cert_transfer_dual: OptimalPair is not a certificate");
    if (!verify_outcome(lp, cert))
        throw std::invalid_argument("cert_transfer_dual: certificate does not verify");

    if (const auto* inf = std::get_if<InfeasibilityCert>(&cert)) {
        // z is a feasible direction for (D) along which b'y decreases without
        // bound: A'(y + t z) >= A'y and b'z < 0.
        return DualCertificate{
            DualCertificate::Kind::UnboundednessForDual,
            inf->z,
            {"A'z >= 0 (direction keeps dual feasibility)", "z >= 0",
             "b'z < 0 (dual objective decreases along z)"},
        };
    }
    const auto& unb = std::get<UnboundednessCert>(cert);
    // w is a Farkas certificate against A'y >= c, y >= 0: any dual-feasible y
    // would give 0 >= y'(Aw) = (A'y)'w >= c'w > 0.
    return DualCertificate{
        DualCertificate::Kind::InfeasibilityForDual,
        unb.w,
        {"Aw <= 0", "w >= 0", "c'w > 0 (no y with A'y >= c, y >= 0 exists)"},
    };
}

const char* outcome_name(const LPOutcome& outcome)
{
    if (std::holds_alternative<OptimalPair>(outcome)) return "optimal";
    if (std::holds_alternative<InfeasibilityCert>(outcome)) return "infeasible";
    return "unbounded";
}

}  // namespace lpgame
