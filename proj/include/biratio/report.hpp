#ifndef BIRATIO_REPORT_HPP
#define BIRATIO_REPORT_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "biratio/constructions.hpp"
#include "biratio/dynamics.hpp"

namespace biratio {

inline constexpr const char* kToolVersion = "0.1.0";

/// std::map-backed, so keys serialize sorted.
using Json = nlohmann::json;

/// "%.12e"; non-finite values print as "inf", "-inf", "nan".
std::string format_float(double v);

Json to_json(const P1Point& p);
Json to_json(const IndPoint& p);
Json to_json(const BidegreeMatrix& m);
Json to_json(const QuadExt& q);
Json to_json(const XieVerdict& v);
Json to_json(const DisjointnessCertificate& c);
Json to_json(const ClosedFormIndReport& r);
Json to_json(const FnData& f);
Json to_json(const TheoremReport& r);
Json to_json(const FixedPointCensus& c);
Json to_json(const DiophantineReport& r);
Json to_json(const RotationVector& r);
/// Summary without the per-seed list.
Json to_json(const ProbeReport& r);

/// Pretty-printed with two-space indent and a trailing newline.
void emit_report(std::ostream& os, const Json& report);
/// Throws Io when the file cannot be written.
void emit_report_file(const std::string& path, const Json& report);

/// Ind points as CSV: set,coordinate,x_inf,x_re,x_im,y_inf,y_re,y_im.
void write_ind_csv(std::ostream& os, const std::string& set, const std::vector<IndPoint>& pts, bool header);

}  // namespace biratio

#endif  // BIRATIO_REPORT_HPP
