// Generated by tools/rs_coefficients.py; do not edit by hand.
#![allow(clippy::excessive_precision)]
//
// Taylor coefficients in z = p - 1/2 of the Riemann-Siegel correction terms C_k(p).

const C0: [f64; 43] = [
    3.82683432365089772e-1,
    0.0,
    1.7489618723100818,
    0.0,
    2.11802520768549637,
    0.0,
    -8.70721667051148074e-1,
    0.0,
    -3.47331122434651671,
    0.0,
    -1.66269473089993245,
    0.0,
    1.21673128891923213,
    0.0,
    1.30143041610079758,
    0.0,
    3.05110218273616724e-2,
    0.0,
    -3.75580305154509524e-1,
    0.0,
    -1.08578441656406597e-1,
    0.0,
    5.18329029995496234e-2,
    0.0,
    2.99994806199022759e-2,
    0.0,
    -2.27593967061256423e-3,
    0.0,
    -4.38264741658033831e-3,
    0.0,
    -4.06423018372984699e-4,
    0.0,
    4.00609778542211393e-4,
    0.0,
    8.9710579913888413e-5,
    0.0,
    -2.30256500272391071e-5,
    0.0,
    -9.38000660190679248e-6,
    0.0,
    6.3235149476091075e-7,
    0.0,
    6.55102281923150167e-7,
];

const C1: [f64; 46] = [
    0.0,
    -5.36502052567506941e-2,
    0.0,
    1.10278187410814824e-1,
    0.0,
    1.23172001543152263,
    0.0,
    1.26349648627994579,
    0.0,
    -1.69510899755950302,
    0.0,
    -2.99987119676501009,
    0.0,
    -1.08199449598992086e-1,
    0.0,
    1.94076629462127127,
    0.0,
    7.83842356150068653e-1,
    0.0,
    -5.05482966790036592e-1,
    0.0,
    -3.84507234960579741e-1,
    0.0,
    3.74726464653153207e-2,
    0.0,
    9.09202661097317632e-2,
    0.0,
    1.04492375500645092e-2,
    0.0,
    -1.25829796515834165e-2,
    0.0,
    -3.39950372115127409e-3,
    0.0,
    1.04109505377148913e-3,
    0.0,
    5.01094905111848686e-4,
    0.0,
    -3.95635966900318156e-5,
    0.0,
    -4.76245924535718964e-5,
    0.0,
    -1.85393553380851323e-6,
    0.0,
    3.1936918080068972e-6,
    0.0,
    4.09078076085060663e-7,
];

const C2: [f64; 47] = [
    5.18854283029316849e-3,
    0.0,
    1.23786335522538984e-3,
    0.0,
    -1.81375057251669974e-1,
    0.0,
    1.42914927485321265e-1,
    0.0,
    1.33033917666875653,
    0.0,
    3.52247235340373368e-1,
    0.0,
    -2.42100159589195072,
    0.0,
    -1.67607870225381089,
    0.0,
    1.36894167233283722,
    0.0,
    1.55390194302229832,
    0.0,
    -1.72216427347299805e-1,
    0.0,
    -6.35906805504543099e-1,
    0.0,
    -9.91164987304120811e-2,
    0.0,
    1.4033480067387009e-1,
    0.0,
    4.78235201982729224e-2,
    0.0,
    -1.73560406414797808e-2,
    0.0,
    -1.02250125340285918e-2,
    0.0,
    9.2741491597948879e-4,
    0.0,
    1.35721943723733853e-3,
    0.0,
    6.41369012029388009e-5,
    0.0,
    -1.23008056981966299e-4,
    0.0,
    -1.83135074047892026e-5,
    0.0,
    7.82162860432262731e-6,
    0.0,
    2.00875424847599455e-6,
];

const C3: [f64; 48] = [
    0.0,
    -2.67943218143891381e-3,
    0.0,
    2.99537210910351496e-2,
    0.0,
    -4.2570172541828698e-2,
    0.0,
    -2.89979657798038875e-1,
    0.0,
    4.88883199923544597e-1,
    0.0,
    1.23085587639574608,
    0.0,
    -8.2975607085274087e-1,
    0.0,
    -2.24976353666656687,
    0.0,
    7.84513996100547138e-2,
    0.0,
    1.7467492800868894,
    0.0,
    4.59680809797499351e-1,
    0.0,
    -6.61935347103977495e-1,
    0.0,
    -3.15904410361736346e-1,
    0.0,
    1.2844792545207496e-1,
    0.0,
    1.00733827166261523e-1,
    0.0,
    -9.53018384882526776e-3,
    0.0,
    -1.92644216875140889e-2,
    0.0,
    -1.24646371587692917e-3,
    0.0,
    2.42439696411030857e-3,
    0.0,
    4.37647697741857018e-4,
    0.0,
    -2.07140326870017913e-4,
    0.0,
    -6.27434450418651556e-5,
    0.0,
    1.15753438145956693e-5,
    0.0,
    5.88385492454037978e-6,
];

const C4: [f64; 49] = [
    4.62730272831634285e-4,
    0.0,
    -4.03225703506022133e-3,
    0.0,
    3.83553421211367231e-3,
    0.0,
    6.58165377377567877e-2,
    0.0,
    -1.96022150554760843e-1,
    0.0,
    -2.08531396987385697e-1,
    0.0,
    9.50768730110617805e-1,
    0.0,
    5.34146377294623928e-1,
    0.0,
    -1.67634960889622103,
    0.0,
    -1.07674509330041811,
    0.0,
    1.23533989851511623,
    0.0,
    1.02578224907891098,
    0.0,
    -4.01241122847811066e-1,
    0.0,
    -5.0366638699993075e-1,
    0.0,
    3.57349020465543452e-2,
    0.0,
    1.44317633101972074e-1,
    0.0,
    1.5091525215741092e-2,
    0.0,
    -2.60988752723357536e-2,
    0.0,
    -6.12662825294666437e-3,
    0.0,
    3.07750318143298156e-3,
    0.0,
    1.15624788993282261e-3,
    0.0,
    -2.27759671185835566e-4,
    0.0,
    -1.4189637130332751e-4,
    0.0,
    7.46486049058450421e-6,
    0.0,
    1.24797016659400195e-5,
];

const C5: [f64; 50] = [
    0.0,
    2.27163035031769701e-4,
    0.0,
    1.10751848330595365e-3,
    0.0,
    -1.62253500525270594e-2,
    0.0,
    5.27580885809232988e-2,
    0.0,
    2.57181200673033955e-2,
    0.0,
    -3.8057011403803192e-1,
    0.0,
    2.25320473701613193e-1,
    0.0,
    1.03444666320669751,
    0.0,
    -5.52830078506910487e-1,
    0.0,
    -1.52876848545478504,
    0.0,
    3.28285777923472163e-1,
    0.0,
    1.22911001255197432,
    0.0,
    4.09364395920465421e-2,
    0.0,
    -5.5860410470393266e-1,
    0.0,
    -1.12419694511624572e-1,
    0.0,
    1.52126795805116336e-1,
    0.0,
    5.17371827323537856e-2,
    0.0,
    -2.5612279651539016e-2,
    0.0,
    -1.29636722965640574e-2,
    0.0,
    2.54555774365478729e-3,
    0.0,
    2.1193319612789094e-3,
    0.0,
    -9.19139370073747511e-5,
    0.0,
    -2.44134667587265556e-4,
    0.0,
    -1.3697981843178428e-5,
    0.0,
    2.06207852238280629e-5,
];

const C6: [f64; 51] = [
    3.36624768461251906e-5,
    0.0,
    -4.87310677340816327e-4,
    0.0,
    3.492301138530451e-3,
    0.0,
    -1.06369670178998916e-2,
    0.0,
    -7.96936577055550127e-3,
    0.0,
    1.23756819924646468e-1,
    0.0,
    -1.84927103949347933e-1,
    0.0,
    -3.03926588948553834e-1,
    0.0,
    7.61275787531567387e-1,
    0.0,
    4.06735515016264381e-1,
    0.0,
    -1.23017123417598831,
    0.0,
    -5.1176058997339462e-1,
    0.0,
    9.96246906393227433e-1,
    0.0,
    4.70566390194559937e-1,
    0.0,
    -4.41444849539746374e-1,
    0.0,
    -2.59184837698745703e-1,
    0.0,
    1.11176946142583417e-1,
    0.0,
    8.79486803680602971e-2,
    0.0,
    -1.48032793467739701e-2,
    0.0,
    -1.96104154511376248e-2,
    0.0,
    3.16501672588809347e-4,
    0.0,
    3.02740152149274231e-3,
    0.0,
    2.6755800948691094e-4,
    0.0,
    -3.34969177327780145e-4,
    0.0,
    -5.89109199594780148e-5,
    0.0,
    2.69663720492435276e-5,
];

pub(crate) const RS_CORRECTIONS: [&[f64]; 7] = [&C0, &C1, &C2, &C3, &C4, &C5, &C6];
