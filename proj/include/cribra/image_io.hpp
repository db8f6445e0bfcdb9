#ifndef CRIBRA_IMAGE_IO_HPP
#define CRIBRA_IMAGE_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "cribra/common.hpp"
#include "cribra/tile.hpp"

namespace cribra {

struct LoadResult {
    Tile tile;
    std::vector<std::string> warnings; // format promotions/truncations
};

// Decode a PNG or TIFF raster into an 8-bit RGB tile. Grayscale and 16-bit
// inputs are promoted/truncated with a recorded warning; alpha is dropped.
inline LoadResult load_tile_pixels(const std::string& path) {
    if (!std::filesystem::exists(path)) throw UnreadableFile("no such file: " + path);
    cv::Mat img = cv::imread(path, cv::IMREAD_UNCHANGED);
    if (img.empty()) throw UnreadableFile("cannot decode image: " + path);

    LoadResult res;
    if (img.depth() == CV_16U) {
        img.convertTo(img, CV_8U, 1.0 / 257.0);
        res.warnings.push_back("16-bit input truncated to 8-bit: " + path);
    } else if (img.depth() != CV_8U) {
        throw UnsupportedPixelFormat("unsupported bit depth in " + path);
    }
    if (img.channels() == 1) {
        cv::Mat rgb;
        cv::merge(std::vector<cv::Mat>{img, img, img}, rgb);
        img = rgb;
        res.warnings.push_back("grayscale input promoted to RGB: " + path);
    } else if (img.channels() == 4) {
        cv::Mat bgr(img.rows, img.cols, CV_8UC3);
        const int from_to[] = {0, 0, 1, 1, 2, 2};
        cv::mixChannels(&img, 1, &bgr, 1, from_to, 3);
        img = bgr;
        res.warnings.push_back("alpha channel dropped: " + path);
    } else if (img.channels() != 3) {
        throw UnsupportedPixelFormat("unsupported channel count in " + path);
    }

    Tile& t = res.tile;
    t.width = img.cols;
    t.height = img.rows;
    t.pixels.resize(static_cast<std::size_t>(t.width) * t.height * 3);
    for (int r = 0; r < t.height; ++r) {
        const cv::Vec3b* row = img.ptr<cv::Vec3b>(r);
        for (int c = 0; c < t.width; ++c) {
            t.at(r, c, 0) = row[c][2]; // OpenCV stores BGR
            t.at(r, c, 1) = row[c][1];
            t.at(r, c, 2) = row[c][0];
        }
    }
    return res;
}

inline void save_tile_png(const Tile& tile, const std::string& path) {
    cv::Mat img(tile.height, tile.width, CV_8UC3);
    for (int r = 0; r < tile.height; ++r) {
        cv::Vec3b* row = img.ptr<cv::Vec3b>(r);
        for (int c = 0; c < tile.width; ++c) {
            row[c][2] = tile.at(r, c, 0);
            row[c][1] = tile.at(r, c, 1);
            row[c][0] = tile.at(r, c, 2);
        }
    }
    if (!cv::imwrite(path, img)) throw Error("cannot write PNG: " + path);
}

inline void save_gray_png(const std::vector<std::uint8_t>& values, int width, int height,
                          const std::string& path) {
    cv::Mat img(height, width, CV_8UC1);
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c)
            img.at<std::uint8_t>(r, c) = values[static_cast<std::size_t>(r) * width + c];
    if (!cv::imwrite(path, img)) throw Error("cannot write PNG: " + path);
}

} // namespace cribra

#endif
