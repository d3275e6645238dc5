#include "netepi/io_util.hpp"
#include "netepi/errors.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace netepi {

void atomic_write(const std::string& path, const std::function<void(std::ostream&)>& writer) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DataError("cannot open for writing: " + tmp);
        writer(out);
        out.flush();
        if (!out) {
            std::remove(tmp.c_str());
            throw DataError("write failed: " + tmp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::remove(tmp.c_str());
        throw DataError("rename failed for " + path + ": " + ec.message());
    }
}

} // namespace netepi
