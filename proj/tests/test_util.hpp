#pragma once

#include "index3d/index3d.hpp"

#include <string>
#include <vector>

namespace index3d::testing {

inline std::string data_path(const std::string& name) { return std::string(INDEX3D_DATA_DIR) + "/" + name; }

inline GluingData fixture(const std::string& name) { return load_gluing_file(data_path(name + ".glu")); }

inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{"fig8", "trefoil", "solidtorus", "t2xi", "cPcbbbdei", "m009"};
    return names;
}

/// Series with integer exponents 0, 1, 2, ... carrying `coeffs`, known below q^order.
inline TruncatedSeries integer_series(const std::vector<long long>& coeffs, long long order) {
    TruncatedSeries s(HalfInt::from_int(order));
    for (std::size_t k = 0; k < coeffs.size(); ++k) s.set(HalfInt::from_int(static_cast<long long>(k)), coeffs[k]);
    return s;
}

/// Series from (doubled exponent, coefficient) pairs, known below doubled order `twice_order`.
inline TruncatedSeries doubled_series(const std::vector<std::pair<long long, long long>>& terms, long long twice_order) {
    TruncatedSeries s(HalfInt{twice_order});
    for (const auto& [e, c] : terms) s.set(HalfInt{e}, c);
    return s;
}

inline HalfInt hi(long long v) { return HalfInt::from_int(v); }

}  // namespace index3d::testing
