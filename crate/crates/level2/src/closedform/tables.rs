// Tabulated equivariant counts, one verbatim row per conjugacy class.

pub(super) static QUARTIC_ROWS: &[&str] = &[
    r#"& \left[7\right] & \, & q^6+q^3"#,
    r#"& \left[6,1\right] & \, & q^6-2q^3+1"#,
    r#"& \left[5,2\right] & \, & q^6-q^2"#,
    r#"& \left[5,1^2\right] & \, & q^6-q^2"#,
    r#"& \left[4,3\right] & \, & q^6-q^5-2q^4+q^3+q^2"#,
    r#"& \left[4,2,1\right] & \, & q^6-q^5-2q^4+q^3-2q^2+3"#,
    r#"& \left[4,1^3\right] & \, & q^6-q^5-2q^4+q^3-2q^2+3"#,
    r#"& \left[3^2,1\right] & \, & q^6-2q^5-2q^4-8q^3+16q^2+10q+21"#,
    r#"& \left[3,2^2\right] & \, & q^6-q^5-2q^4+3q^3+q^2-2q"#,
    r#"& \left[3,2,1^2\right] & \, & q^6-3q^5+5q^3-q^2-2q"#,
    r#"& \left[3,1^4\right] & \, & q^6-5q^5+10q^4-5q^3-11q^2+10q"#,
    r#"& \left[2^3,1\right] & \, & q^6-3q^5-6q^4+19q^3+6q^2-24q+7"#,
    r#"& \left[2^2,1^3\right] & \, & q^6-7q^5+10q^4+15q^3-26q^2-8q+15"#,
    r#"& \left[2,1^5\right] & \, & q^6-15q^5+90q^4-265q^3+374q^2-200q+15"#,
    r#"& \left[1^7\right] & \, & q^6-35q^5+490q^4-3485q^3+13174q^2-24920q+18375"#,
];

pub(super) static M08_ROWS: &[&str] = &[
    r#"& \left[8\right] & \, & \left( {q}^{2}+1 \right) {q}^{3}"#,
    r#"& \left[7,1\right] & \, & \left( q+1 \right) \left( {q}^{2}+q+1 \right) \left( {q}^{2}-q+1 \right)"#,
    r#"& \left[6,2\right] & \, & q \left( q-1 \right) \left( {q}^{3}+q-1 \right)"#,
    r#"& \left[6,1^2\right] & \, & q \left( q+1 \right) \left( {q}^{3}+q-1 \right)"#,
    r#"& \left[5,3\right] & \, & q \left( q-1 \right) \left( q+1 \right) \left( {q}^{2}+1 \right)"#,
    r#"& \left[5,2,1\right] & \, & q \left( q-1 \right) \left( q+1 \right) \left( {q}^{2}+1 \right)"#,
    r#"& \left[5,1^3\right] & \, & q \left( q-1 \right) \left( q+1 \right) \left( {q}^{2}+1 \right)"#,
    r#"& \left[4^2\right] & \, & q \left( {q}^{4}-{q}^{2}-4 \right)"#,
    r#"& \left[4,3,1\right] & \, & \left( q-1 \right) {q}^{2} \left( q+1 \right) ^{2}"#,
    r#"& \left[4,2^2\right] & \, & \left( q-1 \right) \left( q-2 \right) \left( q+1 \right) {q}^{2}"#,
    r#"& \left[4,2,1^2\right] & \, & \left( q-1 \right) \left( q+1 \right) {q}^{3}"#,
    r#"& \left[4,1^4\right] & \, & \left( q-1 \right) \left( q-2 \right) \left( q+1 \right) {q}^{2}"#,
    r#"& \left[3^2,2\right] & \, & q \left( q-1 \right) \left( {q}^{3}-q-3 \right)"#,
    r#"& \left[3^2,1^2\right] & \, & q \left( q+1 \right) \left( {q}^{3}-q-3 \right)"#,
    r#"& \left[3,2^2,1\right] & \, & q \left( q-1 \right) \left( q-2 \right) \left( q+1 \right)^{2}"#,
    r#"& \left[3,2,1^3 \right] & \, & \left( q+1 \right) q^2 \left( q-1 \right)^{2}"#,
    r#"& \left[3,1^5\right] & \, & q \left( q-1 \right) \left( q-2 \right) \left( q-3 \right) \left( q+1 \right)"#,
    r#"& \left[2^4\right] & \, & \left( q-2 \right) \left( q-3 \right) \left( q+2 \right) \left( {q}^{2}-q-4 \right)"#,
    r#"& \left[2^3,1^2\right] & \, & q \left( q-2 \right) \left( q+1 \right) \left( {q}^{2}-q-4 \right)"#,
    r#"& \left[2^2,1^4\right] & \, & q \left( q-1 \right) \left( q+1 \right) \left( q-2 \right) ^{2}"#,
    r#"& \left[2,1^6\right] & \, & q \left( q-1 \right) \left( q-2 \right) \left( q-3 \right) \left( q-4 \right)"#,
    r#"& \left[1^8\right] & \, & \left( q-2 \right) \left( q-3 \right) \left( q-4 \right) \left( q-5 \right) \left( q-6 \right)"#,
];

pub(super) static H3_S8_ROWS: &[&str] = &[
    r#"& \left[8\right] & \, &2\,{q}^{5}+2\,{q}^{3}"#,
    r#"& \left[7,1\right] & \, & {q}^{5}+{q}^{4}+{q}^{3}+{q}^{2}+q+1"#,
    r#"& \left[6,2\right] & \, & 3\,{q}^{5}+3\,{q}^{3}-6\,{q}^{2}-3\,{q}^{4}+3\,q"#,
    r#"& \left[6,1^2\right] & \, & {q}^{5}+{q}^{4}+{q}^{3}-q"#,
    r#"& \left[5,3\right] & \, & {q}^{5}-q"#,
    r#"& \left[5,2,1\right] & \, & {q}^{5}-q"#,
    r#"& \left[5,1^3\right] & \, & {q}^{5}-q"#,
    r#"& \left[4^2\right] & \, & 4\,{q}^{5}-16\,q-4\,{q}^{3}"#,
    r#"& \left[4,3,1\right] & \, & 2\,{q}^{5}+2\,{q}^{4}-2\,{q}^{3}-2\,{q}^{2}"#,
    r#"& \left[4,2^2\right] & \, & 6\,{q}^{5}+12\,{q}^{2}-12\,{q}^{4}-6\,{q}^{3}"#,
    r#"& \left[4,2,1^2\right] & \, & 2\,{q}^{5}-2\,{q}^{3}"#,
    r#"& \left[4,1^4\right] & \, & 2\,{q}^{5}-4\,{q}^{4}-2\,{q}^{3}+4\,{q}^{2}"#,
    r#"& \left[3^2,2\right] & \, & {q}^{5}-{q}^{4}-{q}^{3}-2\,{q}^{2}+3\,q"#,
    r#"& \left[3^2,1^2\right] & \, & 3\,{q}^{5}+3\,{q}^{4}-3\,{q}^{3}-12\,{q}^{2}-9\,q"#,
    r#"& \left[3,2^2,1\right] & \, & 2\,{q}^{5}-2\,{q}^{4}-6\,{q}^{3}+2\,{q}^{2}+4\,q"#,
    r#"& \left[3,2,1^3 \right] & \, & 4\,{q}^{5}-4\,{q}^{4}-4\,{q}^{3}+4\,{q}^{2}"#,
    r#"& \left[3,1^5\right] & \, & 6\,{q}^{5}-30\,{q}^{4}+30\,{q}^{3}+30\,{q}^{2}-36\,q"#,
    r#"& \left[2^4\right] & \, & 12\,{q}^{5}+48\,q-60\,{q}^{3}+336\,{q}^{2}-48\,{q}^{4}-576"#,
    r#"& \left[2^3,1^2\right] & \, & 4\,{q}^{5}-8\,{q}^{4}-20\,{q}^{3}+24\,{q}^{2}+32\,q"#,
    r#"& \left[2^2,1^4\right] & \, & 8\,{q}^{5}-32\,{q}^{4}+24\,{q}^{3}+32\,{q}^{2}-32\,q"#,
    r#"& \left[2,1^6\right] & \, & 16\,{q}^{5}-160\,{q}^{4}+560\,{q}^{3}-800\,{q}^{2}+384\,q"#,
    r#"& \left[1^8\right] & \, & 36\,{q}^{5}-720\,{q}^{4}+5580\,{q}^{3}-20880\,{q}^{2}+37584\,q-25920"#,
];

pub(super) static H3_S7_ROWS: &[&str] = &[
    r#"& \left[7\right] & \, & {q}^{5}+{q}^{4}+{q}^{3}+{q}^{2}+q+1"#,
    r#"& \left[6,1\right] & \, & {q}^{5}+{q}^{4}+{q}^{3}-q"#,
    r#"& \left[5,2\right] & \, & {q}^{5}-q"#,
    r#"& \left[5,1^2\right] & \, & {q}^{5}-q"#,
    r#"& \left[4,3\right] & \, & 2\,{q}^{5}+2\,{q}^{4}-2\,{q}^{3}-2\,{q}^{2}"#,
    r#"& \left[4,2,1\right] & \, & 2\,{q}^{5}-2\,{q}^{3}"#,
    r#"& \left[4,1^3\right] & \, & 2\,{q}^{5}-4\,{q}^{4}-2\,{q}^{3}+4\,{q}^{2}"#,
    r#"& \left[3^2,1\right] & \, & 3\,{q}^{5}+3\,{q}^{4}-3\,{q}^{3}-12\,{q}^{2}-9\,q"#,
    r#"& \left[3,2^2\right] & \, & 2\,{q}^{5}-2\,{q}^{4}-6\,{q}^{3}+2\,{q}^{2}+4\,q"#,
    r#"& \left[3,2,1^2\right] & \, & 4\,{q}^{5}-4\,{q}^{4}-4\,{q}^{3}+4\,{q}^{2}"#,
    r#"& \left[3,1^4\right] & \, & 6\,{q}^{5}-30\,{q}^{4}+30\,{q}^{3}+30\,{q}^{2}-36\,q"#,
    r#"& \left[2^3,1\right] & \, & 4\,{q}^{5}-8\,{q}^{4}-20\,{q}^{3}+24\,{q}^{2}+32\,q"#,
    r#"& \left[2^2,1^3\right] & \, & 8\,{q}^{5}-32\,{q}^{4}+24\,{q}^{3}+32\,{q}^{2}-32\,q"#,
    r#"& \left[2,1^5\right] & \, & 16\,{q}^{5}-160\,{q}^{4}+560\,{q}^{3}-800\,{q}^{2}+384\,q"#,
    r#"& \left[1^7\right] & \, & 36\,{q}^{5}-720\,{q}^{4}+5580\,{q}^{3}-20880\,{q}^{2}+37584\,q-25920"#,
];
