#ifndef FFMOBIUS_VERSION_HPP
#define FFMOBIUS_VERSION_HPP

namespace ffmobius {
inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;
} // namespace ffmobius

#endif
