#pragma once

#include <string>

#include "janus/roles.hpp"

namespace janus {

inline constexpr int kStoreFormatVersion = 1;

/// Persisted concept graph for incremental runs: a versioned JSON document
/// with a content checksum.
struct ConceptStore {
  int format_version = kStoreFormatVersion;
  std::string config_fingerprint;
  ConceptGraph graph;
  RoleAssignment roles;
};

/// Atomic write (temp file + rename). Throws Error{IoError}.
void save_store(const ConceptStore& store, const std::string& path);

/// Throws Error{UnsupportedVersion} for unknown format versions and
/// Error{CorruptStore} for unreadable, truncated or checksum-mismatched files.
ConceptStore load_store(const std::string& path);

/// FNV-1a digest of arbitrary bytes, hex-encoded; used for store checksums
/// and config fingerprints.
std::string content_digest(std::string_view data);

}  // namespace janus
