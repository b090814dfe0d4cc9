#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "partstab/product_spec.hpp"

namespace partstab {

struct PresetParams {
    std::optional<long> m;
    std::optional<long> i;
};

/// Named product specs: partitions, plane_partitions, crank, dt,
/// plane_overpartitions, subsums and csw_original (both need m and i, given
/// in params or inline as "subsums(3,2)"). Throws spec_error for unknown names
/// or missing parameters.
ProductSpec make_preset(std::string_view name, const PresetParams &params = {});

std::vector<std::string> preset_names();

/// Splits "subsums(3,2)" into "subsums", storing 3 and 2 in params.
std::string_view split_preset_name(std::string_view name, PresetParams &params);

/// prod_i 1/(1 - z q^i)^i: plane partitions with z counting the trace.
ProductSpec plane_partitions_spec();

} // namespace partstab
