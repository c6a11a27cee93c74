// Built-in France and Germany yearly unemployment/inflation data, 1980-2011
// (EconStats series).

#include "mlfit/dataio.hpp"

namespace mlfit {

namespace {

const EconRecord kFrance[] = {
    {1980, 6.349, 13.060}, {1981, 7.438, 13.330}, {1982, 8.069, 11.980},
    {1983, 8.421, 9.460},  {1984, 9.771, 7.674},  {1985, 10.230, 5.831},
    {1986, 10.360, 2.539}, {1987, 10.500, 3.289}, {1988, 10.010, 2.701},
    {1989, 9.396, 3.498},  {1990, 8.975, 3.380},  {1991, 9.467, 3.217},
    {1992, 9.850, 2.366},  {1993, 11.120, 2.106}, {1994, 11.680, 1.661},
    {1995, 11.150, 1.778}, {1996, 11.580, 2.084}, {1997, 11.540, 1.283},
    {1998, 11.070, 0.667}, {1999, 10.460, 0.562}, {2000, 9.083, 1.827},
    {2001, 8.392, 1.781},  {2002, 8.908, 1.938},  {2003, 8.900, 2.169},
    {2004, 9.233, 2.342},  {2005, 9.292, 1.900},  {2006, 9.242, 1.912},
    {2007, 8.367, 1.607},  {2008, 7.808, 3.159},  {2009, 9.500, 0.103},
    {2010, 9.802, 1.736},  {2011, 9.675, 2.293},
};

const EconRecord kGermany[] = {
    {1980, 3.359, 5.447},  {1981, 4.831, 6.324},  {1982, 6.734, 5.256},
    {1983, 8.099, 3.284},  {1984, 8.058, 2.396},  {1985, 8.124, 2.084},
    {1986, 7.834, -0.125}, {1987, 7.843, 0.242},  {1988, 7.735, 1.274},
    {1989, 6.790, 2.778},  {1990, 6.155, 2.687},  {1991, 5.470, 3.474},
    {1992, 6.575, 5.046},  {1993, 7.833, 4.476},  {1994, 8.433, 2.717},
    {1995, 8.275, 1.729},  {1996, 8.950, 1.193},  {1997, 9.692, 1.533},
    {1998, 9.433, 0.602},  {1999, 8.625, 0.635},  {2000, 8.000, 1.400},
    {2001, 7.883, 1.904},  {2002, 8.700, 1.355},  {2003, 9.783, 1.031},
    {2004, 10.520, 1.790}, {2005, 11.210, 1.920}, {2006, 10.190, 1.784},
    {2007, 8.783, 2.276},  {2008, 7.600, 2.754},  {2009, 7.742, 0.234},
    {2010, 7.058, 1.150},  {2011, 5.983, 2.482},
};

}  // namespace

const std::map<std::string, DataSet>& embedded_datasets() {
    static const std::map<std::string, DataSet> datasets = [] {
        std::map<std::string, DataSet> m;
        m["france"] = DataSet{"france", {std::begin(kFrance), std::end(kFrance)}};
        m["germany"] = DataSet{"germany", {std::begin(kGermany), std::end(kGermany)}};
        return m;
    }();
    return datasets;
}

}  // namespace mlfit
