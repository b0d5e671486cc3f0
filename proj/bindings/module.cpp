#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <vector>

#include "blockmark/attacks.hpp"
#include "blockmark/embed.hpp"
#include "blockmark/error.hpp"
#include "blockmark/extract.hpp"
#include "blockmark/keyfile.hpp"
#include "blockmark/metrics.hpp"
#include "blockmark/pnm.hpp"
#include "blockmark/rng.hpp"

namespace py = pybind11;
using namespace blockmark;

namespace {

using U8Array = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;

GrayImage image_from_array(const U8Array& arr) {
    if (arr.ndim() != 2) {
        throw std::invalid_argument("expected a 2-D uint8 array (height, width)");
    }
    const auto h = static_cast<int>(arr.shape(0));
    const auto w = static_cast<int>(arr.shape(1));
    const auto* data = arr.data();
    return GrayImage(w, h, std::vector<std::uint8_t>(data, data + arr.size()));
}

py::array_t<std::uint8_t> array_from_image(const GrayImage& img) {
    py::array_t<std::uint8_t> arr({img.height, img.width});
    std::copy(img.pixels.begin(), img.pixels.end(), arr.mutable_data());
    return arr;
}

BitMatrix bits_from_array(const U8Array& arr) {
    if (arr.ndim() != 2) {
        throw std::invalid_argument("expected a 2-D uint8 array (height, width)");
    }
    const auto h = static_cast<int>(arr.shape(0));
    const auto w = static_cast<int>(arr.shape(1));
    const auto* data = arr.data();
    return BitMatrix(w, h, std::vector<std::uint8_t>(data, data + arr.size()));
}

py::array_t<std::uint8_t> array_from_bits(const BitMatrix& mat) {
    py::array_t<std::uint8_t> arr({mat.height, mat.width});
    std::copy(mat.bits.begin(), mat.bits.end(), arr.mutable_data());
    return arr;
}

std::span<const std::uint8_t> bytes_view(const py::bytes& data) {
    char* buffer = nullptr;
    py::ssize_t length = 0;
    if (PyBytes_AsStringAndSize(data.ptr(), &buffer, &length) != 0) {
        throw py::error_already_set();
    }
    return {reinterpret_cast<const std::uint8_t*>(buffer), static_cast<std::size_t>(length)};
}

py::bytes to_bytes(const std::vector<std::uint8_t>& data) {
    return py::bytes(reinterpret_cast<const char*>(data.data()), data.size());
}

KeyFile make_key(int host_width, int host_height, int mark_width, int mark_height,
                 int block_size, std::int64_t alpha_num, std::int64_t alpha_den, int c_min,
                 std::uint64_t seed) {
    KeyFile key;
    key.host_width = host_width;
    key.host_height = host_height;
    key.mark_width = mark_width;
    key.mark_height = mark_height;
    key.block_size = block_size;
    key.alpha_num = alpha_num;
    key.alpha_den = alpha_den;
    key.c_min = c_min;
    SplitMix64 master(seed);
    key.perm_seed = master.next();
    key.scramble_seed = master.next();
    key.delta_seed = master.next();
    key.validate();
    return key;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Block-based grayscale image watermarking: embed, extract, attacks, metrics";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<KeyFile>(m, "KeyFile")
        .def(py::init<>())
        .def_readwrite("host_width", &KeyFile::host_width)
        .def_readwrite("host_height", &KeyFile::host_height)
        .def_readwrite("mark_width", &KeyFile::mark_width)
        .def_readwrite("mark_height", &KeyFile::mark_height)
        .def_readwrite("block_size", &KeyFile::block_size)
        .def_readwrite("alpha_num", &KeyFile::alpha_num)
        .def_readwrite("alpha_den", &KeyFile::alpha_den)
        .def_readwrite("c_min", &KeyFile::c_min)
        .def_readwrite("perm_seed", &KeyFile::perm_seed)
        .def_readwrite("scramble_seed", &KeyFile::scramble_seed)
        .def_readwrite("delta_seed", &KeyFile::delta_seed)
        .def("validate", &KeyFile::validate)
        .def("to_string", [](const KeyFile& k) { return keyfile_serialize(k); })
        .def_static("from_string", [](const std::string& text) { return keyfile_parse(text); })
        .def("__eq__", [](const KeyFile& a, const KeyFile& b) { return a == b; })
        .def("__repr__", [](const KeyFile& k) {
            return "<KeyFile host " + std::to_string(k.host_width) + "x" +
                   std::to_string(k.host_height) + ", mark " + std::to_string(k.mark_width) +
                   "x" + std::to_string(k.mark_height) + ">";
        });

    m.def("make_key", &make_key, py::arg("host_width"), py::arg("host_height"),
          py::arg("mark_width"), py::arg("mark_height"), py::arg("block_size") = 4,
          py::arg("alpha_num") = 1, py::arg("alpha_den") = 10, py::arg("c_min") = 2,
          py::arg("seed") = 0,
          "Build a key with the three stream seeds expanded from one master seed.");

    m.def(
        "embed",
        [](const U8Array& host, const U8Array& mark, const KeyFile& key) {
            return array_from_image(embed(image_from_array(host), bits_from_array(mark), key));
        },
        py::arg("host"), py::arg("mark"), py::arg("key"));
    m.def(
        "extract",
        [](const U8Array& host, const U8Array& watermarked, const KeyFile& key) {
            return array_from_bits(
                extract(image_from_array(host), image_from_array(watermarked), key));
        },
        py::arg("host"), py::arg("watermarked"), py::arg("key"));

    m.def("mse", [](const U8Array& a, const U8Array& b) {
        return mse(image_from_array(a), image_from_array(b));
    });
    m.def("psnr", [](const U8Array& a, const U8Array& b) {
        return psnr(image_from_array(a), image_from_array(b));
    });
    m.def("ber", [](const U8Array& recovered, const U8Array& original) {
        return ber(bits_from_array(recovered), bits_from_array(original));
    });
    m.def("ncc", [](const U8Array& recovered, const U8Array& original) {
        return ncc(bits_from_array(recovered), bits_from_array(original));
    });

    m.def(
        "gaussian_noise",
        [](const U8Array& img, double sigma, std::uint64_t seed) {
            return array_from_image(gaussian_noise(image_from_array(img), sigma, seed));
        },
        py::arg("img"), py::arg("sigma"), py::arg("seed") = 0);
    m.def(
        "salt_pepper",
        [](const U8Array& img, double p, std::uint64_t seed) {
            return array_from_image(salt_pepper(image_from_array(img), p, seed));
        },
        py::arg("img"), py::arg("p"), py::arg("seed") = 0);
    m.def(
        "mean_filter",
        [](const U8Array& img, int k) {
            return array_from_image(mean_filter(image_from_array(img), k));
        },
        py::arg("img"), py::arg("k"));
    m.def(
        "median_filter",
        [](const U8Array& img, int k) {
            return array_from_image(median_filter(image_from_array(img), k));
        },
        py::arg("img"), py::arg("k"));
    m.def(
        "brightness_shift",
        [](const U8Array& img, int offset) {
            return array_from_image(brightness_shift(image_from_array(img), offset));
        },
        py::arg("img"), py::arg("offset"));
    m.def(
        "dct_quantize",
        [](const U8Array& img, int quality) {
            return array_from_image(dct_quantize(image_from_array(img), quality));
        },
        py::arg("img"), py::arg("quality"));

    m.def("read_pgm", [](const py::bytes& data) {
        return array_from_image(read_pgm(bytes_view(data)));
    });
    m.def("write_pgm", [](const U8Array& img) {
        return to_bytes(write_pgm(image_from_array(img)));
    });
    m.def("read_pbm", [](const py::bytes& data) {
        return array_from_bits(read_pbm(bytes_view(data)));
    });
    m.def("write_pbm", [](const U8Array& mat) {
        return to_bytes(write_pbm(bits_from_array(mat)));
    });

    m.def(
        "splitmix64_stream",
        [](std::uint64_t seed, std::size_t count) {
            SplitMix64 rng(seed);
            std::vector<std::uint64_t> out(count);
            for (auto& v : out) v = rng.next();
            return out;
        },
        py::arg("seed"), py::arg("count"),
        "First `count` outputs of the deterministic generator, for parity checks.");
}
