#pragma once
// Write-to-temp-then-rename so failed runs never leave partial outputs.

#include <functional>
#include <ostream>
#include <string>

namespace netepi {

void atomic_write(const std::string& path, const std::function<void(std::ostream&)>& writer);

} // namespace netepi
