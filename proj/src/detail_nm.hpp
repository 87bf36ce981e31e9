// Internal Nelder-Mead used by the orbit-search oracle and by local map
// refinement; dimensions here are 1-3, so plain coefficients suffice.
#pragma once

#include <algorithm>
#include <functional>
#include <vector>

namespace tridec::detail {

inline double nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double>& x, int iters, double step = 0.35) {
    const int d = int(x.size());
    const double alpha = 1.0, gamma = 2.0, rho = 0.5, shrink = 0.5;
    std::vector<std::vector<double>> pts(d + 1, x);
    std::vector<double> fv(d + 1);
    for (int i = 1; i <= d; ++i) pts[i][i - 1] += step;
    for (int i = 0; i <= d; ++i) fv[i] = f(pts[i]);

    for (int it = 0; it < iters; ++it) {
        std::vector<int> ord(d + 1);
        for (int i = 0; i <= d; ++i) ord[i] = i;
        std::sort(ord.begin(), ord.end(), [&](int a, int b) { return fv[a] < fv[b]; });
        if (fv[ord[0]] < 1e-30) break;
        std::vector<double> centroid(d, 0.0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) centroid[j] += pts[ord[i]][j] / d;
        int worst = ord[d];
        auto blend = [&](double t) {
            std::vector<double> p(d);
            for (int j = 0; j < d; ++j) p[j] = centroid[j] + t * (pts[worst][j] - centroid[j]);
            return p;
        };
        std::vector<double> xr = blend(-alpha);
        double fr = f(xr);
        if (fr < fv[ord[0]]) {
            std::vector<double> xe = blend(-gamma);
            double fe = f(xe);
            if (fe < fr) {
                pts[worst] = xe;
                fv[worst] = fe;
            } else {
                pts[worst] = xr;
                fv[worst] = fr;
            }
        } else if (fr < fv[ord[d - 1]]) {
            pts[worst] = xr;
            fv[worst] = fr;
        } else {
            std::vector<double> xc = blend(rho);
            double fc = f(xc);
            if (fc < fv[worst]) {
                pts[worst] = xc;
                fv[worst] = fc;
            } else {
                for (int i = 1; i <= d; ++i) {
                    int k = ord[i];
                    for (int j = 0; j < d; ++j)
                        pts[k][j] = pts[ord[0]][j] + shrink * (pts[k][j] - pts[ord[0]][j]);
                    fv[k] = f(pts[k]);
                }
            }
        }
    }
    int best = 0;
    for (int i = 1; i <= d; ++i)
        if (fv[i] < fv[best]) best = i;
    x = pts[best];
    return fv[best];
}

}  // namespace tridec::detail
