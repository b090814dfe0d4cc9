#include "partstab/presets.hpp"

#include <charconv>

#include "partstab/laurent.hpp"
#include "partstab/overpartitions.hpp"
#include "partstab/subsums.hpp"

namespace partstab {

namespace {

long parse_long(std::string_view text, std::string_view what)
{
    long value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw spec_error("preset: bad " + std::string(what) + " '" + std::string(text) + "'");
    return value;
}

} // namespace

std::string_view split_preset_name(std::string_view name, PresetParams &params)
{
    auto open = name.find('(');
    if (open == std::string_view::npos)
        return name;
    auto comma = name.find(',', open);
    if (name.back() != ')' || comma == std::string_view::npos)
        throw spec_error("preset: cannot parse '" + std::string(name) + "'");
    params.m = parse_long(name.substr(open + 1, comma - open - 1), "m");
    params.i = parse_long(name.substr(comma + 1, name.size() - comma - 2), "i");
    return name.substr(0, open);
}

ProductSpec plane_partitions_spec()
{
    ProductSpec spec;
    spec.name = "plane_partitions";
    FactorRule r;
    r.a = Expr::index();
    spec.rules.push_back(r);
    return spec;
}

ProductSpec make_preset(std::string_view name, const PresetParams &params)
{
    PresetParams p = params;
    std::string_view base = split_preset_name(name, p);
    if (base == "partitions")
        return partitions_spec();
    if (base == "plane_partitions")
        return plane_partitions_spec();
    if (base == "crank")
        return crank_spec();
    if (base == "dt")
        return dt_spec();
    if (base == "plane_overpartitions")
        return plane_overpartition_spec();
    if (base == "subsums" || base == "csw_original") {
        if (!p.m || !p.i)
            throw spec_error("preset '" + std::string(base) + "' needs m and i");
        try {
            return subsum_spec(*p.m, *p.i, base == "subsums" ? SubsumForm::rewritten : SubsumForm::csw);
        } catch (const spec_error &) {
            throw;
        } catch (const std::invalid_argument &e) {
            throw spec_error(e.what());
        }
    }
    throw spec_error("unknown preset '" + std::string(name) + "'");
}

std::vector<std::string> preset_names()
{
    return {"partitions", "plane_partitions", "crank", "dt", "plane_overpartitions", "subsums", "csw_original"};
}

} // namespace partstab
