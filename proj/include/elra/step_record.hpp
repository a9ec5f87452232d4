#pragma once

namespace elra {

/// One optimizer step as seen from the point it departed from:
/// f and cos_t are measured at iterate t, alpha is the step size used to
/// leave it, restarted marks retrace steps.
struct StepRecord {
    long t = 0;
    double f = 0.0;
    double alpha = 0.0;
    double cos_t = 0.0;
    bool restarted = false;
};

}  // namespace elra
