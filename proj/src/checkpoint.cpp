#include "dissrange/checkpoint.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace dissrange {

namespace {

// The build targets little-endian hosts; plain memcpy matches the format.
static_assert(sizeof(double) == 8, "IEEE-754 binary64 expected");

void put_u32(std::ostream& os, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                          static_cast<unsigned char>((v >> 8) & 0xff),
                          static_cast<unsigned char>((v >> 16) & 0xff),
                          static_cast<unsigned char>((v >> 24) & 0xff)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) |
           (static_cast<std::uint32_t>(b[3]) << 24);
}

void put_f64(std::ostream& os, double v) {
    os.write(reinterpret_cast<const char*>(&v), 8);
}

double get_f64(std::istream& is) {
    double v;
    is.read(reinterpret_cast<char*>(&v), 8);
    return v;
}

} // namespace

void write_checkpoint(const std::string& path, const Checkpoint& cp) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_checkpoint: cannot open " + path);
    os.write("DRNG", 4);
    put_u32(os, kCheckpointVersion);
    put_u32(os, static_cast<std::uint32_t>(cp.field.grid.n));
    put_u32(os, 3);
    put_f64(os, cp.t);
    put_f64(os, cp.nu);
    for (int c = 0; c < 3; ++c)
        for (const Complex& z : cp.field.comp[c]) {
            put_f64(os, z.real());
            put_f64(os, z.imag());
        }
    if (!os) throw std::runtime_error("write_checkpoint: write failed for " + path);
}

Checkpoint read_checkpoint(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_checkpoint: cannot open " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "DRNG", 4) != 0)
        throw std::runtime_error("read_checkpoint: bad magic in " + path);
    const std::uint32_t version = get_u32(is);
    if (version != kCheckpointVersion)
        throw std::runtime_error("read_checkpoint: unsupported version in " + path);
    const std::uint32_t n = get_u32(is);
    const std::uint32_t ncomp = get_u32(is);
    if (ncomp != 3) throw std::runtime_error("read_checkpoint: component count must be 3");

    Checkpoint cp;
    cp.field = SpectralField(Grid::make(static_cast<int>(n)));
    cp.t = get_f64(is);
    cp.nu = get_f64(is);
    for (int c = 0; c < 3; ++c)
        for (Complex& z : cp.field.comp[c]) {
            const double re = get_f64(is);
            const double im = get_f64(is);
            z = Complex{re, im};
        }
    if (!is) throw std::runtime_error("read_checkpoint: truncated file " + path);
    return cp;
}

} // namespace dissrange
