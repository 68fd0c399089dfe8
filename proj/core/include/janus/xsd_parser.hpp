#pragma once

#include <string>
#include <string_view>

#include "janus/xsd_model.hpp"

namespace janus {

/// Parses one XSD document into the structural model. Constructs outside the
/// supported set are recorded as "skipped-construct" warnings on the result.
/// Throws Error{MalformedXml} or Error{NotASchema}.
SchemaDocument parse_schema_document(std::string_view text,
                                     const std::string& source_id);

}  // namespace janus
