#pragma once

// Spectra of dimension 5 to 26 that sum to 1/2, are realised with
// non-negative entries, and each violate one classical sufficient condition.

#include <string>

namespace sdiep::golden {

inline const std::string kSigma5Odd = "1,-0.02,-0.03,-0.05,-0.4";
inline const std::string kSigma6Even = "1,-0.01,-0.02,-0.06,-0.08,-0.33";
inline const std::string kSigma10ImprovedSoules = "1,-0.01,-0.01,-0.025,-0.03,-0.035,-0.04,-0.05,-0.08,-0.22";
inline const std::string kSigma5New1 = "1,-0.03,-0.03,-0.04,-0.4";
inline const std::string kSigma16New2 =
    "1,-0.003,-0.003,-0.004,-0.007,-0.009,-0.02,-0.0209,-0.021,-0.024,-0.026,-0.035,-0.042,-0.076,-0.0811,-0.128";
inline const std::string kSigma10New2 = "1,-0.01,-0.01,-0.01,-0.02,-0.02,-0.04,-0.07,-0.1,-0.22";
inline const std::string kSigma11New2 = "1,-0.001,-0.004,-0.01,-0.01,-0.012,-0.013,-0.05,-0.09,-0.11,-0.2";
inline const std::string kSigma9New2 = "1,-0.006,-0.018,-0.02,-0.028,-0.028,-0.053,-0.105,-0.242";
inline const std::string kSigma26New3 =
    "1,-0.004,-0.005,-0.006,-0.007,-0.01,-0.01,-0.011,-0.011,-0.011,-0.012,-0.012,-0.015,-0.015,-0.016,"
    "-0.017,-0.019,-0.02,-0.022,-0.022,-0.025,-0.028,-0.028,-0.032,-0.069,-0.073";

inline const std::string kDeltaMinWitness = "1,-0.004,-0.002,-0.004,-0.51";

} // namespace sdiep::golden
