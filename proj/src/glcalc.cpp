#include "fracver/glcalc.hpp"

#include "fracver/errors.hpp"

#include <cmath>

namespace fracver {

GLWeights gl_coefficients(double alpha, int N) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("gl_coefficients: alpha must lie in (0,1)");
    if (N < 0) throw DomainError("gl_coefficients: N must be >= 0");
    GLWeights w;
    w.alpha = alpha;
    w.omega.resize(N + 1);
    w.omega[0] = 1.0;
    for (int j = 1; j <= N; ++j)
        w.omega[j] = w.omega[j - 1] * (1.0 - (alpha + 1.0) / j);
    return w;
}

SampledFunction gl_derivative(double alpha, const FunctionInput& f, const Grid& g,
                              ExtensionKind ext) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("gl_derivative: alpha must lie in (0,1)");
    const int N = g.N;
    const GLWeights w = gl_coefficients(alpha, N);
    Eigen::VectorXd v(N + 1);
    for (int j = 0; j <= N; ++j) v[j] = f.value_at_node(g, j);
    const double base = ext == ExtensionKind::TaylorExtension ? v[0] : 0.0;
    const double scale = std::pow(g.h, -alpha);
    Eigen::VectorXd out(N + 1);
    out[0] = 0.0; // empty sum beyond j = 0 minus base
    if (ext == ExtensionKind::ZeroExtension) out[0] = scale * v[0];
    for (int n = 1; n <= N; ++n) {
        double s = 0.0;
        for (int j = n; j >= 0; --j) // small-magnitude tail first
            s += w.omega[j] * (v[n - j] - base);
        out[n] = scale * s;
    }
    SampledFunction r(g, std::move(out));
    r.origin = OriginMark::Value;
    return r;
}

} // namespace fracver
