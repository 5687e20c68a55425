#include "lagrel/affine.hpp"

namespace lagrel {

Relation gaa_generator(GaaKind kind, std::size_t in, std::size_t out, const Q& phase) {
    const std::size_t d = in + out;
    switch (kind) {
        case GaaKind::Grey: {
            require(phase.is_zero(), ErrorKind::UnknownKind, "the affine grey spider carries no phase");
            Matrix<Q> c(d == 0 ? 0 : d - 1, d);
            for (std::size_t k = 1; k < d; ++k) {
                c(k - 1, 0) = Q(1);
                c(k - 1, k) = Q(-1);
            }
            return Relation::from_constraints(in, out, c, Vector<Q>(c.rows(), Q(0)));
        }
        case GaaKind::White: {
            Matrix<Q> c(1, d);
            for (std::size_t k = 0; k < d; ++k) c(0, k) = Q(1);
            return Relation::from_constraints(in, out, c, {phase});
        }
        case GaaKind::Scalar:
            require(in == 1 && out == 1, ErrorKind::DimensionMismatch, "scalar multiplication is 1->1");
            return scalar_mult(phase);
    }
    fail(ErrorKind::UnknownKind, "unknown affine generator");
}

Relation gaa_generator(const std::string& kind, std::size_t in, std::size_t out, const Q& phase) {
    if (kind == "grey") return gaa_generator(GaaKind::Grey, in, out, phase);
    if (kind == "white") return gaa_generator(GaaKind::White, in, out, phase);
    if (kind == "scalar") return gaa_generator(GaaKind::Scalar, in, out, phase);
    fail(ErrorKind::UnknownKind, "unknown affine generator '" + kind + "'");
}

Relation scalar_mult(const Q& c) {
    Matrix<Q> m(1, 2);
    m(0, 0) = c;
    m(0, 1) = Q(-1);
    return Relation::from_constraints(1, 1, m, {Q(0)});
}

}  // namespace lagrel
