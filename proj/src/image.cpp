#include "squircle/image.hpp"

#include <png.h>

#include <cstring>

namespace squircle {

RasterImage RasterImage::make(int width, int height) {
    if (width < 1 || height < 1)
        throw ParamError("RasterImage: dimensions must be at least 1x1");
    RasterImage img;
    img.width = width;
    img.height = height;
    img.pixels.assign(static_cast<size_t>(width) * height * 4, 0);
    return img;
}

RasterImage load_png(const std::string& path) {
    png_image png;
    std::memset(&png, 0, sizeof(png));
    png.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&png, path.c_str()))
        throw IoError("failed to open PNG '" + path + "': " + png.message);
    png.format = PNG_FORMAT_RGBA;
    RasterImage img = RasterImage::make(static_cast<int>(png.width),
                                        static_cast<int>(png.height));
    if (!png_image_finish_read(&png, nullptr, img.pixels.data(), 0, nullptr)) {
        const std::string msg = png.message;
        png_image_free(&png);
        throw IoError("failed to read PNG '" + path + "': " + msg);
    }
    return img;
}

void save_png(const RasterImage& img, const std::string& path) {
    if (img.width < 1 || img.height < 1 ||
        img.pixels.size() != static_cast<size_t>(img.width) * img.height * 4)
        throw ParamError("save_png: image buffer does not match its dimensions");
    png_image png;
    std::memset(&png, 0, sizeof(png));
    png.version = PNG_IMAGE_VERSION;
    png.width = static_cast<png_uint_32>(img.width);
    png.height = static_cast<png_uint_32>(img.height);
    png.format = PNG_FORMAT_RGBA;
    if (!png_image_write_to_file(&png, path.c_str(), 0, img.pixels.data(), 0,
                                 nullptr))
        throw IoError("failed to write PNG '" + path + "': " + png.message);
}

}  // namespace squircle
