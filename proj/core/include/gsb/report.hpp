#pragma once

#include "gsb/presentation_io.hpp"
#include "gsb/resolution.hpp"

namespace gsb {

inline constexpr const char* kReportSchemaVersion = "1";

/// FNV-1a 64-bit digest of the raw input text, hex-encoded.
std::string input_digest(const std::string& text);

/// Common header: schema version, subcommand, input digest. No timestamps;
/// reports must be byte-identical across runs.
Json report_header(const std::string& subcommand, const std::string& input_text);

/// Rationals as "a/b" strings (integers without the slash); never floats.
Json scalar_to_json(const Scalar& s);

Json admissibility_to_json(const AdmissibilityReport& rep);
Json gs_report_to_json(const GSReport& rep, const Context& ctx);
Json certificate_to_json(const Certificate& cert, const Context& ctx);
Json slice_report_to_json(const SliceReport& rep);
Json ext_report_to_json(const ExtReport& rep);
Json iomega_report_to_json(const IomegaReport& rep);

}  // namespace gsb
