#pragma once

namespace longrange {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kLogFormatVersion = 1;
inline constexpr int kDatasetFormatVersion = 1;
inline constexpr int kCheckpointFormatVersion = 1;

}  // namespace longrange
