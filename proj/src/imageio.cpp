#include "fishfresh/imageio.hpp"

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "fishfresh/errors.hpp"

namespace fishfresh {

std::optional<RasterImage> decode_image(const std::filesystem::path& path, std::string* error) {
    cv::Mat mat = cv::imread(path.string(), cv::IMREAD_COLOR);
    if (mat.empty()) {
        if (error != nullptr) *error = "not a decodable image";
        return std::nullopt;
    }
    RasterImage img(mat.cols, mat.rows);
    for (int y = 0; y < mat.rows; ++y) {
        const cv::Vec3b* row = mat.ptr<cv::Vec3b>(y);
        for (int x = 0; x < mat.cols; ++x)
            img.set_pixel(x, y, row[x][0], row[x][1], row[x][2]);
    }
    return img;
}

void encode_png(const std::filesystem::path& path, const RasterImage& img) {
    cv::Mat mat(img.height, img.width, CV_8UC3);
    for (int y = 0; y < img.height; ++y) {
        cv::Vec3b* row = mat.ptr<cv::Vec3b>(y);
        for (int x = 0; x < img.width; ++x)
            row[x] = cv::Vec3b(img.at(x, y, 0), img.at(x, y, 1), img.at(x, y, 2));
    }
    if (!cv::imwrite(path.string(), mat))
        throw IoError("failed to write PNG: " + path.string());
}

}  // namespace fishfresh
