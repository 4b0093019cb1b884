#include "l2k/image.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace l2k {

Image2D round_to_bits(const Image2D& img, int bits) {
    if (bits < 1 || bits > 31) throw std::invalid_argument("round_to_bits: bad bit depth");
    const double maxv = static_cast<double>((1u << bits) - 1);
    Image2D out = img;
    out.declared_bits = bits;
    for (double& v : out.samples) {
        v = std::round(v);
        if (v < 0.0) v = 0.0;
        if (v > maxv) v = maxv;
    }
    return out;
}

void write_file_atomic(const std::string& path, const std::string& bytes) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename failed: " + path);
}

namespace {

void skip_pnm_ws(std::istream& in) {
    for (;;) {
        int c = in.peek();
        if (c == '#') {
            std::string line;
            std::getline(in, line);
        } else if (std::isspace(c)) {
            in.get();
        } else {
            break;
        }
    }
}

int read_pnm_int(std::istream& in) {
    skip_pnm_ws(in);
    int v;
    if (!(in >> v)) throw std::runtime_error("malformed PNM header");
    return v;
}

} // namespace

Image2D read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string magic;
    in >> magic;
    if (magic != "P2" && magic != "P5")
        throw std::runtime_error("not a PGM file: " + path);
    const int w = read_pnm_int(in);
    const int h = read_pnm_int(in);
    const int maxval = read_pnm_int(in);
    if (w <= 0 || h <= 0 || maxval <= 0 || maxval > 65535)
        throw std::runtime_error("bad PGM dimensions: " + path);
    Image2D img(w, h);
    img.declared_bits = maxval < 256 ? 8 : 16;
    if (magic == "P2") {
        for (double& v : img.samples) v = read_pnm_int(in);
    } else {
        in.get();  // single whitespace after maxval
        if (maxval < 256) {
            std::vector<std::uint8_t> buf(img.samples.size());
            in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
            if (!in) throw std::runtime_error("truncated PGM: " + path);
            for (std::size_t i = 0; i < buf.size(); ++i) img.samples[i] = buf[i];
        } else {
            std::vector<std::uint8_t> buf(img.samples.size() * 2);
            in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
            if (!in) throw std::runtime_error("truncated PGM: " + path);
            for (std::size_t i = 0; i < img.samples.size(); ++i)
                img.samples[i] = buf[2 * i] * 256 + buf[2 * i + 1];  // big-endian per spec
        }
    }
    return img;
}

void write_pgm(const std::string& path, const Image2D& img, int maxval, bool binary) {
    if (maxval <= 0 || maxval > 65535) throw std::invalid_argument("write_pgm: bad maxval");
    std::ostringstream out;
    out << (binary ? "P5" : "P2") << "\n"
        << img.width << " " << img.height << "\n"
        << maxval << "\n";
    auto clamp = [&](double v) {
        long q = std::lround(v);
        if (q < 0) q = 0;
        if (q > maxval) q = maxval;
        return static_cast<int>(q);
    };
    if (binary) {
        std::string data;
        data.reserve(img.samples.size() * (maxval < 256 ? 1 : 2));
        for (double v : img.samples) {
            const int q = clamp(v);
            if (maxval < 256) {
                data.push_back(static_cast<char>(q));
            } else {
                data.push_back(static_cast<char>(q / 256));
                data.push_back(static_cast<char>(q % 256));
            }
        }
        out << data;
    } else {
        for (int y = 0; y < img.height; ++y) {
            for (int x = 0; x < img.width; ++x)
                out << clamp(img.at(x, y)) << (x + 1 == img.width ? "" : " ");
            out << "\n";
        }
    }
    write_file_atomic(path, out.str());
}

Image2D read_f64(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::uint32_t wh[2];
    in.read(reinterpret_cast<char*>(wh), 8);
    if (!in) throw std::runtime_error("truncated f64 header: " + path);
    Image2D img(static_cast<int>(wh[0]), static_cast<int>(wh[1]));
    in.read(reinterpret_cast<char*>(img.samples.data()),
            static_cast<std::streamsize>(img.samples.size() * sizeof(double)));
    if (!in) throw std::runtime_error("truncated f64 data: " + path);
    return img;
}

void write_f64(const std::string& path, const Image2D& img) {
    std::string bytes;
    const std::uint32_t wh[2] = {static_cast<std::uint32_t>(img.width),
                                 static_cast<std::uint32_t>(img.height)};
    bytes.append(reinterpret_cast<const char*>(wh), 8);
    bytes.append(reinterpret_cast<const char*>(img.samples.data()),
                 img.samples.size() * sizeof(double));
    write_file_atomic(path, bytes);
}

void write_ppm(const std::string& path, const ImageRgb& img) {
    std::ostringstream out;
    out << "P6\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.samples.data()),
              static_cast<std::streamsize>(img.samples.size()));
    write_file_atomic(path, out.str());
}

} // namespace l2k
