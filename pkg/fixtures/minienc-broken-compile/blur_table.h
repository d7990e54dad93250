/* Byte substitution table for the blur stage; generated once
   from the multiplicative hash (i * 2654435761) >> 13 & 0xff. */
static const unsigned char blur_table[4096] = {
    0x00, 0xbb, 0x77, 0x33, 0xef, 0xab, 0x66, 0x22, 0xde, 0x9a, 0x56, 0x11, 0xcd, 0x89, 0x45, 0x01,
    0xbc, 0x78, 0x34, 0xf0, 0xac, 0x67, 0x23, 0xdf, 0x9b, 0x57, 0x12, 0xce, 0x8a, 0x46, 0x02, 0xbd,
    0x79, 0x35, 0xf1, 0xad, 0x68, 0x24, 0xe0, 0x9c, 0x58, 0x13, 0xcf, 0x8b, 0x47, 0x03, 0xbe, 0x7a,
    0x36, 0xf2, 0xae, 0x69, 0x25, 0xe1, 0x9d, 0x59, 0x14, 0xd0, 0x8c, 0x48, 0x04, 0xbf, 0x7b, 0x37,
    0xf3, 0xaf, 0x6a, 0x26, 0xe2, 0x9e, 0x5a, 0x16, 0xd1, 0x8d, 0x49, 0x05, 0xc1, 0x7c, 0x38, 0xf4,
    0xb0, 0x6c, 0x27, 0xe3, 0x9f, 0x5b, 0x17, 0xd2, 0x8e, 0x4a, 0x06, 0xc2, 0x7d, 0x39, 0xf5, 0xb1,
    0x6d, 0x28, 0xe4, 0xa0, 0x5c, 0x18, 0xd3, 0x8f, 0x4b, 0x07, 0xc3, 0x7e, 0x3a, 0xf6, 0xb2, 0x6e,
    0x29, 0xe5, 0xa1, 0x5d, 0x19, 0xd4, 0x90, 0x4c, 0x08, 0xc4, 0x7f, 0x3b, 0xf7, 0xb3, 0x6f, 0x2a,
    0xe6, 0xa2, 0x5e, 0x1a, 0xd5, 0x91, 0x4d, 0x09, 0xc5, 0x80, 0x3c, 0xf8, 0xb4, 0x70, 0x2c, 0xe7,
    0xa3, 0x5f, 0x1b, 0xd7, 0x92, 0x4e, 0x0a, 0xc6, 0x82, 0x3d, 0xf9, 0xb5, 0x71, 0x2d, 0xe8, 0xa4,
    0x60, 0x1c, 0xd8, 0x93, 0x4f, 0x0b, 0xc7, 0x83, 0x3e, 0xfa, 0xb6, 0x72, 0x2e, 0xe9, 0xa5, 0x61,
    0x1d, 0xd9, 0x94, 0x50, 0x0c, 0xc8, 0x84, 0x3f, 0xfb, 0xb7, 0x73, 0x2f, 0xea, 0xa6, 0x62, 0x1e,
    0xda, 0x95, 0x51, 0x0d, 0xc9, 0x85, 0x40, 0xfc, 0xb8, 0x74, 0x30, 0xeb, 0xa7, 0x63, 0x1f, 0xdb,
    0x96, 0x52, 0x0e, 0xca, 0x86, 0x42, 0xfd, 0xb9, 0x75, 0x31, 0xed, 0xa8, 0x64, 0x20, 0xdc, 0x98,
    0x53, 0x0f, 0xcb, 0x87, 0x43, 0xfe, 0xba, 0x76, 0x32, 0xee, 0xa9, 0x65, 0x21, 0xdd, 0x99, 0x54,
    0x10, 0xcc, 0x88, 0x44, 0xff, 0xbb, 0x77, 0x33, 0xef, 0xaa, 0x66, 0x22, 0xde, 0x9a, 0x55, 0x11,
    0xcd, 0x89, 0x45, 0x00, 0xbc, 0x78, 0x34, 0xf0, 0xab, 0x67, 0x23, 0xdf, 0x9b, 0x56, 0x12, 0xce,
    0x8a, 0x46, 0x01, 0xbd, 0x79, 0x35, 0xf1, 0xac, 0x68, 0x24, 0xe0, 0x9c, 0x58, 0x13, 0xcf, 0x8b,
    0x47, 0x03, 0xbe, 0x7a, 0x36, 0xf2, 0xae, 0x69, 0x25, 0xe1, 0x9d, 0x59, 0x14, 0xd0, 0x8c, 0x48,
    0x04, 0xbf, 0x7b, 0x37, 0xf3, 0xaf, 0x6a, 0x26, 0xe2, 0x9e, 0x5a, 0x15, 0xd1, 0x8d, 0x49, 0x05,
    0xc0, 0x7c, 0x38, 0xf4, 0xb0, 0x6b, 0x27, 0xe3, 0x9f, 0x5b, 0x16, 0xd2, 0x8e, 0x4a, 0x06, 0xc1,
    0x7d, 0x39, 0xf5, 0xb1, 0x6c, 0x28, 0xe4, 0xa0, 0x5c, 0x17, 0xd3, 0x8f, 0x4b, 0x07, 0xc2, 0x7e,
    0x3a, 0xf6, 0xb2, 0x6e, 0x29, 0xe5, 0xa1, 0x5d, 0x19, 0xd4, 0x90, 0x4c, 0x08, 0xc4, 0x7f, 0x3b,
    0xf7, 0xb3, 0x6f, 0x2a, 0xe6, 0xa2, 0x5e, 0x1a, 0xd5, 0x91, 0x4d, 0x09, 0xc5, 0x80, 0x3c, 0xf8,
    0xb4, 0x70, 0x2b, 0xe7, 0xa3, 0x5f, 0x1b, 0xd6, 0x92, 0x4e, 0x0a, 0xc6, 0x81, 0x3d, 0xf9, 0xb5,
    0x71, 0x2c, 0xe8, 0xa4, 0x60, 0x1c, 0xd7, 0x93, 0x4f, 0x0b, 0xc7, 0x82, 0x3e, 0xfa, 0xb6, 0x72,
    0x2d, 0xe9, 0xa5, 0x61, 0x1d, 0xd9, 0x94, 0x50, 0x0c, 0xc8, 0x84, 0x3f, 0xfb, 0xb7, 0x73, 0x2f,
    0xea, 0xa6, 0x62, 0x1e, 0xda, 0x95, 0x51, 0x0d, 0xc9, 0x85, 0x40, 0xfc, 0xb8, 0x74, 0x30, 0xeb,
    0xa7, 0x63, 0x1f, 0xdb, 0x96, 0x52, 0x0e, 0xca, 0x86, 0x41, 0xfd, 0xb9, 0x75, 0x31, 0xec, 0xa8,
    0x64, 0x20, 0xdc, 0x97, 0x53, 0x0f, 0xcb, 0x87, 0x42, 0xfe, 0xba, 0x76, 0x32, 0xed, 0xa9, 0x65,
    0x21, 0xdd, 0x98, 0x54, 0x10, 0xcc, 0x88, 0x43, 0xff, 0xbb, 0x77, 0x33, 0xef, 0xaa, 0x66, 0x22,
    0xde, 0x9a, 0x55, 0x11, 0xcd, 0x89, 0x45, 0x00, 0xbc, 0x78, 0x34, 0xf0, 0xab, 0x67, 0x23, 0xdf,
    0x9b, 0x56, 0x12, 0xce, 0x8a, 0x46, 0x01, 0xbd, 0x79, 0x35, 0xf1, 0xac, 0x68, 0x24, 0xe0, 0x9c,
    0x57, 0x13, 0xcf, 0x8b, 0x47, 0x02, 0xbe, 0x7a, 0x36, 0xf2, 0xad, 0x69, 0x25, 0xe1, 0x9d, 0x58,
    0x14, 0xd0, 0x8c, 0x48, 0x03, 0xbf, 0x7b, 0x37, 0xf3, 0xae, 0x6a, 0x26, 0xe2, 0x9e, 0x59, 0x15,
    0xd1, 0x8d, 0x49, 0x05, 0xc0, 0x7c, 0x38, 0xf4, 0xb0, 0x6b, 0x27, 0xe3, 0x9f, 0x5b, 0x16, 0xd2,
    0x8e, 0x4a, 0x06, 0xc1, 0x7d, 0x39, 0xf5, 0xb1, 0x6c, 0x28, 0xe4, 0xa0, 0x5c, 0x17, 0xd3, 0x8f,
    0x4b, 0x07, 0xc2, 0x7e, 0x3a, 0xf6, 0xb2, 0x6d, 0x29, 0xe5, 0xa1, 0x5d, 0x18, 0xd4, 0x90, 0x4c,
    0x08, 0xc3, 0x7f, 0x3b, 0xf7, 0xb3, 0x6e, 0x2a, 0xe6, 0xa2, 0x5e, 0x19, 0xd5, 0x91, 0x4d, 0x09,
    0xc4, 0x80, 0x3c, 0xf8, 0xb4, 0x6f, 0x2b, 0xe7, 0xa3, 0x5f, 0x1b, 0xd6, 0x92, 0x4e, 0x0a, 0xc6,
    0x81, 0x3d, 0xf9, 0xb5, 0x71, 0x2c, 0xe8, 0xa4, 0x60, 0x1c, 0xd7, 0x93, 0x4f, 0x0b, 0xc7, 0x82,
    0x3e, 0xfa, 0xb6, 0x72, 0x2d, 0xe9, 0xa5, 0x61, 0x1d, 0xd8, 0x94, 0x50, 0x0c, 0xc8, 0x83, 0x3f,
    0xfb, 0xb7, 0x73, 0x2e, 0xea, 0xa6, 0x62, 0x1e, 0xd9, 0x95, 0x51, 0x0d, 0xc9, 0x84, 0x40, 0xfc,
    0xb8, 0x74, 0x2f, 0xeb, 0xa7, 0x63, 0x1f, 0xda, 0x96, 0x52, 0x0e, 0xca, 0x85, 0x41, 0xfd, 0xb9,
    0x75, 0x31, 0xec, 0xa8, 0x64, 0x20, 0xdc, 0x97, 0x53, 0x0f, 0xcb, 0x87, 0x42, 0xfe, 0xba, 0x76,
    0x32, 0xed, 0xa9, 0x65, 0x21, 0xdd, 0x98, 0x54, 0x10, 0xcc, 0x88, 0x43, 0xff, 0xbb, 0x77, 0x33,
    0xee, 0xaa, 0x66, 0x22, 0xde, 0x99, 0x55, 0x11, 0xcd, 0x89, 0x44, 0x00, 0xbc, 0x78, 0x34, 0xef,
    0xab, 0x67, 0x23, 0xdf, 0x9a, 0x56, 0x12, 0xce, 0x8a, 0x45, 0x01, 0xbd, 0x79, 0x35, 0xf0, 0xac,
    0x68, 0x24, 0xe0, 0x9c, 0x57, 0x13, 0xcf, 0x8b, 0x47, 0x02, 0xbe, 0x7a, 0x36, 0xf2, 0xad, 0x69,
    0x25, 0xe1, 0x9d, 0x58, 0x14, 0xd0, 0x8c, 0x48, 0x03, 0xbf, 0x7b, 0x37, 0xf3, 0xae, 0x6a, 0x26,
    0xe2, 0x9e, 0x59, 0x15, 0xd1, 0x8d, 0x49, 0x04, 0xc0, 0x7c, 0x38, 0xf4, 0xaf, 0x6b, 0x27, 0xe3,
    0x9f, 0x5a, 0x16, 0xd2, 0x8e, 0x4a, 0x05, 0xc1, 0x7d, 0x39, 0xf5, 0xb0, 0x6c, 0x28, 0xe4, 0xa0,
    0x5b, 0x17, 0xd3, 0x8f, 0x4b, 0x06, 0xc2, 0x7e, 0x3a, 0xf6, 0xb2, 0x6d, 0x29, 0xe5, 0xa1, 0x5d,
    0x18, 0xd4, 0x90, 0x4c, 0x08, 0xc3, 0x7f, 0x3b, 0xf7, 0xb3, 0x6e, 0x2a, 0xe6, 0xa2, 0x5e, 0x19,
    0xd5, 0x91, 0x4d, 0x09, 0xc4, 0x80, 0x3c, 0xf8, 0xb4, 0x6f, 0x2b, 0xe7, 0xa3, 0x5f, 0x1a, 0xd6,
    0x92, 0x4e, 0x0a, 0xc5, 0x81, 0x3d, 0xf9, 0xb5, 0x70, 0x2c, 0xe8, 0xa4, 0x60, 0x1b, 0xd7, 0x93,
    0x4f, 0x0b, 0xc6, 0x82, 0x3e, 0xfa, 0xb6, 0x71, 0x2d, 0xe9, 0xa5, 0x61, 0x1c, 0xd8, 0x94, 0x50,
    0x0c, 0xc8, 0x83, 0x3f, 0xfb, 0xb7, 0x73, 0x2e, 0xea, 0xa6, 0x62, 0x1e, 0xd9, 0x95, 0x51, 0x0d,
    0xc9, 0x84, 0x40, 0xfc, 0xb8, 0x74, 0x2f, 0xeb, 0xa7, 0x63, 0x1f, 0xda, 0x96, 0x52, 0x0e, 0xca,
    0x85, 0x41, 0xfd, 0xb9, 0x75, 0x30, 0xec, 0xa8, 0x64, 0x20, 0xdb, 0x97, 0x53, 0x0f, 0xcb, 0x86,
    0x42, 0xfe, 0xba, 0x76, 0x31, 0xed, 0xa9, 0x65, 0x21, 0xdc, 0x98, 0x54, 0x10, 0xcc, 0x87, 0x43,
    0xff, 0xbb, 0x77, 0x32, 0xee, 0xaa, 0x66, 0x22, 0xde, 0x99, 0x55, 0x11, 0xcd, 0x89, 0x44, 0x00,
    0xbc, 0x78, 0x34, 0xef, 0xab, 0x67, 0x23, 0xdf, 0x9a, 0x56, 0x12, 0xce, 0x8a, 0x45, 0x01, 0xbd,
    0x79, 0x35, 0xf0, 0xac, 0x68, 0x24, 0xe0, 0x9b, 0x57, 0x13, 0xcf, 0x8b, 0x46, 0x02, 0xbe, 0x7a,
    0x36, 0xf1, 0xad, 0x69, 0x25, 0xe1, 0x9c, 0x58, 0x14, 0xd0, 0x8c, 0x47, 0x03, 0xbf, 0x7b, 0x37,
    0xf2, 0xae, 0x6a, 0x26, 0xe2, 0x9d, 0x59, 0x15, 0xd1, 0x8d, 0x48, 0x04, 0xc0, 0x7c, 0x38, 0xf4,
    0xaf, 0x6b, 0x27, 0xe3, 0x9f, 0x5a, 0x16, 0xd2, 0x8e, 0x4a, 0x05, 0xc1, 0x7d, 0x39, 0xf5, 0xb0,
    0x6c, 0x28, 0xe4, 0xa0, 0x5b, 0x17, 0xd3, 0x8f, 0x4b, 0x06, 0xc2, 0x7e, 0x3a, 0xf6, 0xb1, 0x6d,
    0x29, 0xe5, 0xa1, 0x5c, 0x18, 0xd4, 0x90, 0x4c, 0x07, 0xc3, 0x7f, 0x3b, 0xf7, 0xb2, 0x6e, 0x2a,
    0xe6, 0xa2, 0x5d, 0x19, 0xd5, 0x91, 0x4d, 0x08, 0xc4, 0x80, 0x3c, 0xf8, 0xb3, 0x6f, 0x2b, 0xe7,
    0xa3, 0x5f, 0x1a, 0xd6, 0x92, 0x4e, 0x0a, 0xc5, 0x81, 0x3d, 0xf9, 0xb5, 0x70, 0x2c, 0xe8, 0xa4,
    0x60, 0x1b, 0xd7, 0x93, 0x4f, 0x0b, 0xc6, 0x82, 0x3e, 0xfa, 0xb6, 0x71, 0x2d, 0xe9, 0xa5, 0x61,
    0x1c, 0xd8, 0x94, 0x50, 0x0c, 0xc7, 0x83, 0x3f, 0xfb, 0xb7, 0x72, 0x2e, 0xea, 0xa6, 0x62, 0x1d,
    0xd9, 0x95, 0x51, 0x0d, 0xc8, 0x84, 0x40, 0xfc, 0xb8, 0x73, 0x2f, 0xeb, 0xa7, 0x63, 0x1e, 0xda,
    0x96, 0x52, 0x0e, 0xc9, 0x85, 0x41, 0xfd, 0xb9, 0x75, 0x30, 0xec, 0xa8, 0x64, 0x20, 0xdb, 0x97,
    0x53, 0x0f, 0xcb, 0x86, 0x42, 0xfe, 0xba, 0x76, 0x31, 0xed, 0xa9, 0x65, 0x21, 0xdc, 0x98, 0x54,
    0x10, 0xcc, 0x87, 0x43, 0xff, 0xbb, 0x77, 0x32, 0xee, 0xaa, 0x66, 0x22, 0xdd, 0x99, 0x55, 0x11,
    0xcd, 0x88, 0x44, 0x00, 0xbc, 0x78, 0x33, 0xef, 0xab, 0x67, 0x23, 0xde, 0x9a, 0x56, 0x12, 0xce,
    0x89, 0x45, 0x01, 0xbd, 0x79, 0x34, 0xf0, 0xac, 0x68, 0x24, 0xdf, 0x9b, 0x57, 0x13, 0xcf, 0x8b,
    0x46, 0x02, 0xbe, 0x7a, 0x36, 0xf1, 0xad, 0x69, 0x25, 0xe1, 0x9c, 0x58, 0x14, 0xd0, 0x8c, 0x47,
    0x03, 0xbf, 0x7b, 0x37, 0xf2, 0xae, 0x6a, 0x26, 0xe2, 0x9d, 0x59, 0x15, 0xd1, 0x8d, 0x48, 0x04,
    0xc0, 0x7c, 0x38, 0xf3, 0xaf, 0x6b, 0x27, 0xe3, 0x9e, 0x5a, 0x16, 0xd2, 0x8e, 0x49, 0x05, 0xc1,
    0x7d, 0x39, 0xf4, 0xb0, 0x6c, 0x28, 0xe4, 0x9f, 0x5b, 0x17, 0xd3, 0x8f, 0x4a, 0x06, 0xc2, 0x7e,
    0x3a, 0xf5, 0xb1, 0x6d, 0x29, 0xe5, 0xa1, 0x5c, 0x18, 0xd4, 0x90, 0x4c, 0x07, 0xc3, 0x7f, 0x3b,
    0xf7, 0xb2, 0x6e, 0x2a, 0xe6, 0xa2, 0x5d, 0x19, 0xd5, 0x91, 0x4d, 0x08, 0xc4, 0x80, 0x3c, 0xf8,
    0xb3, 0x6f, 0x2b, 0xe7, 0xa3, 0x5e, 0x1a, 0xd6, 0x92, 0x4e, 0x09, 0xc5, 0x81, 0x3d, 0xf9, 0xb4,
    0x70, 0x2c, 0xe8, 0xa4, 0x5f, 0x1b, 0xd7, 0x93, 0x4f, 0x0a, 0xc6, 0x82, 0x3e, 0xfa, 0xb5, 0x71,
    0x2d, 0xe9, 0xa5, 0x60, 0x1c, 0xd8, 0x94, 0x50, 0x0b, 0xc7, 0x83, 0x3f, 0xfb, 0xb7, 0x72, 0x2e,
    0xea, 0xa6, 0x62, 0x1d, 0xd9, 0x95, 0x51, 0x0d, 0xc8, 0x84, 0x40, 0xfc, 0xb8, 0x73, 0x2f, 0xeb,
    0xa7, 0x63, 0x1e, 0xda, 0x96, 0x52, 0x0e, 0xc9, 0x85, 0x41, 0xfd, 0xb9, 0x74, 0x30, 0xec, 0xa8,
    0x64, 0x1f, 0xdb, 0x97, 0x53, 0x0f, 0xca, 0x86, 0x42, 0xfe, 0xba, 0x75, 0x31, 0xed, 0xa9, 0x65,
    0x20, 0xdc, 0x98, 0x54, 0x10, 0xcb, 0x87, 0x43, 0xff, 0xbb, 0x76, 0x32, 0xee, 0xaa, 0x66, 0x22,
    0xdd, 0x99, 0x55, 0x11, 0xcd, 0x88, 0x44, 0x00, 0xbc, 0x78, 0x33, 0xef, 0xab, 0x67, 0x23, 0xde,
    0x9a, 0x56, 0x12, 0xce, 0x89, 0x45, 0x01, 0xbd, 0x79, 0x34, 0xf0, 0xac, 0x68, 0x24, 0xdf, 0x9b,
    0x57, 0x13, 0xcf, 0x8a, 0x46, 0x02, 0xbe, 0x7a, 0x35, 0xf1, 0xad, 0x69, 0x25, 0xe0, 0x9c, 0x58,
    0x14, 0xd0, 0x8b, 0x47, 0x03, 0xbf, 0x7b, 0x36, 0xf2, 0xae, 0x6a, 0x26, 0xe1, 0x9d, 0x59, 0x15,
    0xd1, 0x8c, 0x48, 0x04, 0xc0, 0x7c, 0x38, 0xf3, 0xaf, 0x6b, 0x27, 0xe3, 0x9e, 0x5a, 0x16, 0xd2,
    0x8e, 0x49, 0x05, 0xc1, 0x7d, 0x39, 0xf4, 0xb0, 0x6c, 0x28, 0xe4, 0x9f, 0x5b, 0x17, 0xd3, 0x8f,
    0x4a, 0x06, 0xc2, 0x7e, 0x3a, 0xf5, 0xb1, 0x6d, 0x29, 0xe5, 0xa0, 0x5c, 0x18, 0xd4, 0x90, 0x4b,
    0x07, 0xc3, 0x7f, 0x3b, 0xf6, 0xb2, 0x6e, 0x2a, 0xe6, 0xa1, 0x5d, 0x19, 0xd5, 0x91, 0x4c, 0x08,
    0xc4, 0x80, 0x3c, 0xf7, 0xb3, 0x6f, 0x2b, 0xe7, 0xa2, 0x5e, 0x1a, 0xd6, 0x92, 0x4e, 0x09, 0xc5,
    0x81, 0x3d, 0xf9, 0xb4, 0x70, 0x2c, 0xe8, 0xa4, 0x5f, 0x1b, 0xd7, 0x93, 0x4f, 0x0a, 0xc6, 0x82,
    0x3e, 0xfa, 0xb5, 0x71, 0x2d, 0xe9, 0xa5, 0x60, 0x1c, 0xd8, 0x94, 0x50, 0x0b, 0xc7, 0x83, 0x3f,
    0xfb, 0xb6, 0x72, 0x2e, 0xea, 0xa6, 0x61, 0x1d, 0xd9, 0x95, 0x51, 0x0c, 0xc8, 0x84, 0x40, 0xfc,
    0xb7, 0x73, 0x2f, 0xeb, 0xa7, 0x62, 0x1e, 0xda, 0x96, 0x52, 0x0d, 0xc9, 0x85, 0x41, 0xfd, 0xb8,
    0x74, 0x30, 0xec, 0xa8, 0x64, 0x1f, 0xdb, 0x97, 0x53, 0x0f, 0xca, 0x86, 0x42, 0xfe, 0xba, 0x75,
    0x31, 0xed, 0xa9, 0x65, 0x20, 0xdc, 0x98, 0x54, 0x10, 0xcb, 0x87, 0x43, 0xff, 0xbb, 0x76, 0x32,
    0xee, 0xaa, 0x66, 0x21, 0xdd, 0x99, 0x55, 0x11, 0xcc, 0x88, 0x44, 0x00, 0xbc, 0x77, 0x33, 0xef,
    0xab, 0x67, 0x22, 0xde, 0x9a, 0x56, 0x12, 0xcd, 0x89, 0x45, 0x01, 0xbd, 0x78, 0x34, 0xf0, 0xac,
    0x68, 0x23, 0xdf, 0x9b, 0x57, 0x13, 0xce, 0x8a, 0x46, 0x02, 0xbe, 0x7a, 0x35, 0xf1, 0xad, 0x69,
    0x25, 0xe0, 0x9c, 0x58, 0x14, 0xd0, 0x8b, 0x47, 0x03, 0xbf, 0x7b, 0x36, 0xf2, 0xae, 0x6a, 0x26,
    0xe1, 0x9d, 0x59, 0x15, 0xd1, 0x8c, 0x48, 0x04, 0xc0, 0x7c, 0x37, 0xf3, 0xaf, 0x6b, 0x27, 0xe2,
    0x9e, 0x5a, 0x16, 0xd2, 0x8d, 0x49, 0x05, 0xc1, 0x7d, 0x38, 0xf4, 0xb0, 0x6c, 0x28, 0xe3, 0x9f,
    0x5b, 0x17, 0xd3, 0x8e, 0x4a, 0x06, 0xc2, 0x7e, 0x39, 0xf5, 0xb1, 0x6d, 0x29, 0xe5, 0xa0, 0x5c,
    0x18, 0xd4, 0x90, 0x4b, 0x07, 0xc3, 0x7f, 0x3b, 0xf6, 0xb2, 0x6e, 0x2a, 0xe6, 0xa1, 0x5d, 0x19,
    0xd5, 0x91, 0x4c, 0x08, 0xc4, 0x80, 0x3c, 0xf7, 0xb3, 0x6f, 0x2b, 0xe7, 0xa2, 0x5e, 0x1a, 0xd6,
    0x92, 0x4d, 0x09, 0xc5, 0x81, 0x3d, 0xf8, 0xb4, 0x70, 0x2c, 0xe8, 0xa3, 0x5f, 0x1b, 0xd7, 0x93,
    0x4e, 0x0a, 0xc6, 0x82, 0x3e, 0xf9, 0xb5, 0x71, 0x2d, 0xe9, 0xa4, 0x60, 0x1c, 0xd8, 0x94, 0x4f,
    0x0b, 0xc7, 0x83, 0x3f, 0xfb, 0xb6, 0x72, 0x2e, 0xea, 0xa6, 0x61, 0x1d, 0xd9, 0x95, 0x51, 0x0c,
    0xc8, 0x84, 0x40, 0xfc, 0xb7, 0x73, 0x2f, 0xeb, 0xa7, 0x62, 0x1e, 0xda, 0x96, 0x52, 0x0d, 0xc9,
    0x85, 0x41, 0xfd, 0xb8, 0x74, 0x30, 0xec, 0xa8, 0x63, 0x1f, 0xdb, 0x97, 0x53, 0x0e, 0xca, 0x86,
    0x42, 0xfe, 0xb9, 0x75, 0x31, 0xed, 0xa9, 0x64, 0x20, 0xdc, 0x98, 0x54, 0x0f, 0xcb, 0x87, 0x43,
    0xff, 0xba, 0x76, 0x32, 0xee, 0xaa, 0x65, 0x21, 0xdd, 0x99, 0x55, 0x11, 0xcc, 0x88, 0x44, 0x00,
    0xbc, 0x77, 0x33, 0xef, 0xab, 0x67, 0x22, 0xde, 0x9a, 0x56, 0x12, 0xcd, 0x89, 0x45, 0x01, 0xbd,
    0x78, 0x34, 0xf0, 0xac, 0x68, 0x23, 0xdf, 0x9b, 0x57, 0x13, 0xce, 0x8a, 0x46, 0x02, 0xbe, 0x79,
    0x35, 0xf1, 0xad, 0x69, 0x24, 0xe0, 0x9c, 0x58, 0x14, 0xcf, 0x8b, 0x47, 0x03, 0xbf, 0x7a, 0x36,
    0xf2, 0xae, 0x6a, 0x25, 0xe1, 0x9d, 0x59, 0x15, 0xd0, 0x8c, 0x48, 0x04, 0xc0, 0x7b, 0x37, 0xf3,
    0xaf, 0x6b, 0x27, 0xe2, 0x9e, 0x5a, 0x16, 0xd2, 0x8d, 0x49, 0x05, 0xc1, 0x7d, 0x38, 0xf4, 0xb0,
    0x6c, 0x28, 0xe3, 0x9f, 0x5b, 0x17, 0xd3, 0x8e, 0x4a, 0x06, 0xc2, 0x7e, 0x39, 0xf5, 0xb1, 0x6d,
    0x29, 0xe4, 0xa0, 0x5c, 0x18, 0xd4, 0x8f, 0x4b, 0x07, 0xc3, 0x7f, 0x3a, 0xf6, 0xb2, 0x6e, 0x2a,
    0xe5, 0xa1, 0x5d, 0x19, 0xd5, 0x90, 0x4c, 0x08, 0xc4, 0x80, 0x3b, 0xf7, 0xb3, 0x6f, 0x2b, 0xe6,
    0xa2, 0x5e, 0x1a, 0xd6, 0x91, 0x4d, 0x09, 0xc5, 0x81, 0x3d, 0xf8, 0xb4, 0x70, 0x2c, 0xe8, 0xa3,
    0x5f, 0x1b, 0xd7, 0x93, 0x4e, 0x0a, 0xc6, 0x82, 0x3e, 0xf9, 0xb5, 0x71, 0x2d, 0xe9, 0xa4, 0x60,
    0x1c, 0xd8, 0x94, 0x4f, 0x0b, 0xc7, 0x83, 0x3f, 0xfa, 0xb6, 0x72, 0x2e, 0xea, 0xa5, 0x61, 0x1d,
    0xd9, 0x95, 0x50, 0x0c, 0xc8, 0x84, 0x40, 0xfb, 0xb7, 0x73, 0x2f, 0xeb, 0xa6, 0x62, 0x1e, 0xda,
    0x96, 0x51, 0x0d, 0xc9, 0x85, 0x41, 0xfc, 0xb8, 0x74, 0x30, 0xec, 0xa8, 0x63, 0x1f, 0xdb, 0x97,
    0x53, 0x0e, 0xca, 0x86, 0x42, 0xfe, 0xb9, 0x75, 0x31, 0xed, 0xa9, 0x64, 0x20, 0xdc, 0x98, 0x54,
    0x0f, 0xcb, 0x87, 0x43, 0xff, 0xba, 0x76, 0x32, 0xee, 0xaa, 0x65, 0x21, 0xdd, 0x99, 0x55, 0x10,
    0xcc, 0x88, 0x44, 0x00, 0xbb, 0x77, 0x33, 0xef, 0xab, 0x66, 0x22, 0xde, 0x9a, 0x56, 0x11, 0xcd,
    0x89, 0x45, 0x01, 0xbc, 0x78, 0x34, 0xf0, 0xac, 0x67, 0x23, 0xdf, 0x9b, 0x57, 0x12, 0xce, 0x8a,
    0x46, 0x02, 0xbe, 0x79, 0x35, 0xf1, 0xad, 0x69, 0x24, 0xe0, 0x9c, 0x58, 0x14, 0xcf, 0x8b, 0x47,
    0x03, 0xbf, 0x7a, 0x36, 0xf2, 0xae, 0x6a, 0x25, 0xe1, 0x9d, 0x59, 0x15, 0xd0, 0x8c, 0x48, 0x04,
    0xc0, 0x7b, 0x37, 0xf3, 0xaf, 0x6b, 0x26, 0xe2, 0x9e, 0x5a, 0x16, 0xd1, 0x8d, 0x49, 0x05, 0xc1,
    0x7c, 0x38, 0xf4, 0xb0, 0x6c, 0x27, 0xe3, 0x9f, 0x5b, 0x17, 0xd2, 0x8e, 0x4a, 0x06, 0xc2, 0x7d,
    0x39, 0xf5, 0xb1, 0x6d, 0x28, 0xe4, 0xa0, 0x5c, 0x18, 0xd4, 0x8f, 0x4b, 0x07, 0xc3, 0x7f, 0x3a,
    0xf6, 0xb2, 0x6e, 0x2a, 0xe5, 0xa1, 0x5d, 0x19, 0xd5, 0x90, 0x4c, 0x08, 0xc4, 0x80, 0x3b, 0xf7,
    0xb3, 0x6f, 0x2b, 0xe6, 0xa2, 0x5e, 0x1a, 0xd6, 0x91, 0x4d, 0x09, 0xc5, 0x81, 0x3c, 0xf8, 0xb4,
    0x70, 0x2c, 0xe7, 0xa3, 0x5f, 0x1b, 0xd7, 0x92, 0x4e, 0x0a, 0xc6, 0x82, 0x3d, 0xf9, 0xb5, 0x71,
    0x2d, 0xe8, 0xa4, 0x60, 0x1c, 0xd8, 0x93, 0x4f, 0x0b, 0xc7, 0x83, 0x3e, 0xfa, 0xb6, 0x72, 0x2e,
    0xea, 0xa5, 0x61, 0x1d, 0xd9, 0x95, 0x50, 0x0c, 0xc8, 0x84, 0x40, 0xfb, 0xb7, 0x73, 0x2f, 0xeb,
    0xa6, 0x62, 0x1e, 0xda, 0x96, 0x51, 0x0d, 0xc9, 0x85, 0x41, 0xfc, 0xb8, 0x74, 0x30, 0xec, 0xa7,
    0x63, 0x1f, 0xdb, 0x97, 0x52, 0x0e, 0xca, 0x86, 0x42, 0xfd, 0xb9, 0x75, 0x31, 0xed, 0xa8, 0x64,
    0x20, 0xdc, 0x98, 0x53, 0x0f, 0xcb, 0x87, 0x43, 0xfe, 0xba, 0x76, 0x32, 0xee, 0xa9, 0x65, 0x21,
    0xdd, 0x99, 0x54, 0x10, 0xcc, 0x88, 0x44, 0x00, 0xbb, 0x77, 0x33, 0xef, 0xab, 0x66, 0x22, 0xde,
    0x9a, 0x56, 0x11, 0xcd, 0x89, 0x45, 0x01, 0xbc, 0x78, 0x34, 0xf0, 0xac, 0x67, 0x23, 0xdf, 0x9b,
    0x57, 0x12, 0xce, 0x8a, 0x46, 0x02, 0xbd, 0x79, 0x35, 0xf1, 0xad, 0x68, 0x24, 0xe0, 0x9c, 0x58,
    0x13, 0xcf, 0x8b, 0x47, 0x03, 0xbe, 0x7a, 0x36, 0xf2, 0xae, 0x69, 0x25, 0xe1, 0x9d, 0x59, 0x14,
    0xd0, 0x8c, 0x48, 0x04, 0xbf, 0x7b, 0x37, 0xf3, 0xaf, 0x6b, 0x26, 0xe2, 0x9e, 0x5a, 0x16, 0xd1,
    0x8d, 0x49, 0x05, 0xc1, 0x7c, 0x38, 0xf4, 0xb0, 0x6c, 0x27, 0xe3, 0x9f, 0x5b, 0x17, 0xd2, 0x8e,
    0x4a, 0x06, 0xc2, 0x7d, 0x39, 0xf5, 0xb1, 0x6d, 0x28, 0xe4, 0xa0, 0x5c, 0x18, 0xd3, 0x8f, 0x4b,
    0x07, 0xc3, 0x7e, 0x3a, 0xf6, 0xb2, 0x6e, 0x29, 0xe5, 0xa1, 0x5d, 0x19, 0xd4, 0x90, 0x4c, 0x08,
    0xc4, 0x7f, 0x3b, 0xf7, 0xb3, 0x6f, 0x2a, 0xe6, 0xa2, 0x5e, 0x1a, 0xd5, 0x91, 0x4d, 0x09, 0xc5,
    0x81, 0x3c, 0xf8, 0xb4, 0x70, 0x2c, 0xe7, 0xa3, 0x5f, 0x1b, 0xd7, 0x92, 0x4e, 0x0a, 0xc6, 0x82,
    0x3d, 0xf9, 0xb5, 0x71, 0x2d, 0xe8, 0xa4, 0x60, 0x1c, 0xd8, 0x93, 0x4f, 0x0b, 0xc7, 0x83, 0x3e,
    0xfa, 0xb6, 0x72, 0x2e, 0xe9, 0xa5, 0x61, 0x1d, 0xd9, 0x94, 0x50, 0x0c, 0xc8, 0x84, 0x3f, 0xfb,
    0xb7, 0x73, 0x2f, 0xea, 0xa6, 0x62, 0x1e, 0xda, 0x95, 0x51, 0x0d, 0xc9, 0x85, 0x40, 0xfc, 0xb8,
    0x74, 0x30, 0xeb, 0xa7, 0x63, 0x1f, 0xdb, 0x97, 0x52, 0x0e, 0xca, 0x86, 0x42, 0xfd, 0xb9, 0x75,
    0x31, 0xed, 0xa8, 0x64, 0x20, 0xdc, 0x98, 0x53, 0x0f, 0xcb, 0x87, 0x43, 0xfe, 0xba, 0x76, 0x32,
    0xee, 0xa9, 0x65, 0x21, 0xdd, 0x99, 0x54, 0x10, 0xcc, 0x88, 0x44, 0xff, 0xbb, 0x77, 0x33, 0xef,
    0xaa, 0x66, 0x22, 0xde, 0x9a, 0x55, 0x11, 0xcd, 0x89, 0x45, 0x00, 0xbc, 0x78, 0x34, 0xf0, 0xab,
    0x67, 0x23, 0xdf, 0x9b, 0x56, 0x12, 0xce, 0x8a, 0x46, 0x01, 0xbd, 0x79, 0x35, 0xf1, 0xad, 0x68,
    0x24, 0xe0, 0x9c, 0x58, 0x13, 0xcf, 0x8b, 0x47, 0x03, 0xbe, 0x7a, 0x36, 0xf2, 0xae, 0x69, 0x25,
    0xe1, 0x9d, 0x59, 0x14, 0xd0, 0x8c, 0x48, 0x04, 0xbf, 0x7b, 0x37, 0xf3, 0xaf, 0x6a, 0x26, 0xe2,
    0x9e, 0x5a, 0x15, 0xd1, 0x8d, 0x49, 0x05, 0xc0, 0x7c, 0x38, 0xf4, 0xb0, 0x6b, 0x27, 0xe3, 0x9f,
    0x5b, 0x16, 0xd2, 0x8e, 0x4a, 0x06, 0xc1, 0x7d, 0x39, 0xf5, 0xb1, 0x6c, 0x28, 0xe4, 0xa0, 0x5c,
    0x17, 0xd3, 0x8f, 0x4b, 0x07, 0xc3, 0x7e, 0x3a, 0xf6, 0xb2, 0x6e, 0x29, 0xe5, 0xa1, 0x5d, 0x19,
    0xd4, 0x90, 0x4c, 0x08, 0xc4, 0x7f, 0x3b, 0xf7, 0xb3, 0x6f, 0x2a, 0xe6, 0xa2, 0x5e, 0x1a, 0xd5,
    0x91, 0x4d, 0x09, 0xc5, 0x80, 0x3c, 0xf8, 0xb4, 0x70, 0x2b, 0xe7, 0xa3, 0x5f, 0x1b, 0xd6, 0x92,
    0x4e, 0x0a, 0xc6, 0x81, 0x3d, 0xf9, 0xb5, 0x71, 0x2c, 0xe8, 0xa4, 0x60, 0x1c, 0xd7, 0x93, 0x4f,
    0x0b, 0xc7, 0x82, 0x3e, 0xfa, 0xb6, 0x72, 0x2e, 0xe9, 0xa5, 0x61, 0x1d, 0xd9, 0x94, 0x50, 0x0c,
    0xc8, 0x84, 0x3f, 0xfb, 0xb7, 0x73, 0x2f, 0xea, 0xa6, 0x62, 0x1e, 0xda, 0x95, 0x51, 0x0d, 0xc9,
    0x85, 0x40, 0xfc, 0xb8, 0x74, 0x30, 0xeb, 0xa7, 0x63, 0x1f, 0xdb, 0x96, 0x52, 0x0e, 0xca, 0x86,
    0x41, 0xfd, 0xb9, 0x75, 0x31, 0xec, 0xa8, 0x64, 0x20, 0xdc, 0x97, 0x53, 0x0f, 0xcb, 0x87, 0x42,
    0xfe, 0xba, 0x76, 0x32, 0xed, 0xa9, 0x65, 0x21, 0xdd, 0x98, 0x54, 0x10, 0xcc, 0x88, 0x44, 0xff,
    0xbb, 0x77, 0x33, 0xef, 0xaa, 0x66, 0x22, 0xde, 0x9a, 0x55, 0x11, 0xcd, 0x89, 0x45, 0x00, 0xbc,
    0x78, 0x34, 0xf0, 0xab, 0x67, 0x23, 0xdf, 0x9b, 0x56, 0x12, 0xce, 0x8a, 0x46, 0x01, 0xbd, 0x79,
    0x35, 0xf1, 0xac, 0x68, 0x24, 0xe0, 0x9c, 0x57, 0x13, 0xcf, 0x8b, 0x47, 0x02, 0xbe, 0x7a, 0x36,
    0xf2, 0xad, 0x69, 0x25, 0xe1, 0x9d, 0x58, 0x14, 0xd0, 0x8c, 0x48, 0x03, 0xbf, 0x7b, 0x37, 0xf3,
    0xae, 0x6a, 0x26, 0xe2, 0x9e, 0x5a, 0x15, 0xd1, 0x8d, 0x49, 0x05, 0xc0, 0x7c, 0x38, 0xf4, 0xb0,
    0x6b, 0x27, 0xe3, 0x9f, 0x5b, 0x16, 0xd2, 0x8e, 0x4a, 0x06, 0xc1, 0x7d, 0x39, 0xf5, 0xb1, 0x6c,
    0x28, 0xe4, 0xa0, 0x5c, 0x17, 0xd3, 0x8f, 0x4b, 0x07, 0xc2, 0x7e, 0x3a, 0xf6, 0xb2, 0x6d, 0x29,
    0xe5, 0xa1, 0x5d, 0x18, 0xd4, 0x90, 0x4c, 0x08, 0xc3, 0x7f, 0x3b, 0xf7, 0xb3, 0x6e, 0x2a, 0xe6,
    0xa2, 0x5e, 0x19, 0xd5, 0x91, 0x4d, 0x09, 0xc4, 0x80, 0x3c, 0xf8, 0xb4, 0x70, 0x2b, 0xe7, 0xa3,
    0x5f, 0x1b, 0xd6, 0x92, 0x4e, 0x0a, 0xc6, 0x81, 0x3d, 0xf9, 0xb5, 0x71, 0x2c, 0xe8, 0xa4, 0x60,
    0x1c, 0xd7, 0x93, 0x4f, 0x0b, 0xc7, 0x82, 0x3e, 0xfa, 0xb6, 0x72, 0x2d, 0xe9, 0xa5, 0x61, 0x1d,
    0xd8, 0x94, 0x50, 0x0c, 0xc8, 0x83, 0x3f, 0xfb, 0xb7, 0x73, 0x2e, 0xea, 0xa6, 0x62, 0x1e, 0xd9,
    0x95, 0x51, 0x0d, 0xc9, 0x84, 0x40, 0xfc, 0xb8, 0x74, 0x2f, 0xeb, 0xa7, 0x63, 0x1f, 0xda, 0x96,
    0x52, 0x0e, 0xca, 0x86, 0x41, 0xfd, 0xb9, 0x75, 0x31, 0xec, 0xa8, 0x64, 0x20, 0xdc, 0x97, 0x53,
    0x0f, 0xcb, 0x87, 0x42, 0xfe, 0xba, 0x76, 0x32, 0xed, 0xa9, 0x65, 0x21, 0xdd, 0x98, 0x54, 0x10,
    0xcc, 0x88, 0x43, 0xff, 0xbb, 0x77, 0x33, 0xee, 0xaa, 0x66, 0x22, 0xde, 0x99, 0x55, 0x11, 0xcd,
    0x89, 0x44, 0x00, 0xbc, 0x78, 0x34, 0xef, 0xab, 0x67, 0x23, 0xdf, 0x9a, 0x56, 0x12, 0xce, 0x8a,
    0x45, 0x01, 0xbd, 0x79, 0x35, 0xf1, 0xac, 0x68, 0x24, 0xe0, 0x9c, 0x57, 0x13, 0xcf, 0x8b, 0x47,
    0x02, 0xbe, 0x7a, 0x36, 0xf2, 0xad, 0x69, 0x25, 0xe1, 0x9d, 0x58, 0x14, 0xd0, 0x8c, 0x48, 0x03,
    0xbf, 0x7b, 0x37, 0xf3, 0xae, 0x6a, 0x26, 0xe2, 0x9e, 0x59, 0x15, 0xd1, 0x8d, 0x49, 0x04, 0xc0,
    0x7c, 0x38, 0xf4, 0xaf, 0x6b, 0x27, 0xe3, 0x9f, 0x5a, 0x16, 0xd2, 0x8e, 0x4a, 0x05, 0xc1, 0x7d,
    0x39, 0xf5, 0xb0, 0x6c, 0x28, 0xe4, 0xa0, 0x5b, 0x17, 0xd3, 0x8f, 0x4b, 0x07, 0xc2, 0x7e, 0x3a,
    0xf6, 0xb2, 0x6d, 0x29, 0xe5, 0xa1, 0x5d, 0x18, 0xd4, 0x90, 0x4c, 0x08, 0xc3, 0x7f, 0x3b, 0xf7,
    0xb3, 0x6e, 0x2a, 0xe6, 0xa2, 0x5e, 0x19, 0xd5, 0x91, 0x4d, 0x09, 0xc4, 0x80, 0x3c, 0xf8, 0xb4,
    0x6f, 0x2b, 0xe7, 0xa3, 0x5f, 0x1a, 0xd6, 0x92, 0x4e, 0x0a, 0xc5, 0x81, 0x3d, 0xf9, 0xb5, 0x70,
    0x2c, 0xe8, 0xa4, 0x60, 0x1b, 0xd7, 0x93, 0x4f, 0x0b, 0xc6, 0x82, 0x3e, 0xfa, 0xb6, 0x71, 0x2d,
    0xe9, 0xa5, 0x61, 0x1d, 0xd8, 0x94, 0x50, 0x0c, 0xc8, 0x83, 0x3f, 0xfb, 0xb7, 0x73, 0x2e, 0xea,
    0xa6, 0x62, 0x1e, 0xd9, 0x95, 0x51, 0x0d, 0xc9, 0x84, 0x40, 0xfc, 0xb8, 0x74, 0x2f, 0xeb, 0xa7,
    0x63, 0x1f, 0xda, 0x96, 0x52, 0x0e, 0xca, 0x85, 0x41, 0xfd, 0xb9, 0x75, 0x30, 0xec, 0xa8, 0x64,
    0x20, 0xdb, 0x97, 0x53, 0x0f, 0xcb, 0x86, 0x42, 0xfe, 0xba, 0x76, 0x31, 0xed, 0xa9, 0x65, 0x21,
    0xdc, 0x98, 0x54, 0x10, 0xcc, 0x87, 0x43, 0xff, 0xbb, 0x77, 0x33, 0xee, 0xaa, 0x66, 0x22, 0xde,
    0x99, 0x55, 0x11, 0xcd, 0x89, 0x44, 0x00, 0xbc, 0x78, 0x34, 0xef, 0xab, 0x67, 0x23, 0xdf, 0x9a,
    0x56, 0x12, 0xce, 0x8a, 0x45, 0x01, 0xbd, 0x79, 0x35, 0xf0, 0xac, 0x68, 0x24, 0xe0, 0x9b, 0x57,
    0x13, 0xcf, 0x8b, 0x46, 0x02, 0xbe, 0x7a, 0x36, 0xf1, 0xad, 0x69, 0x25, 0xe1, 0x9c, 0x58, 0x14,
    0xd0, 0x8c, 0x47, 0x03, 0xbf, 0x7b, 0x37, 0xf2, 0xae, 0x6a, 0x26, 0xe2, 0x9d, 0x59, 0x15, 0xd1,
    0x8d, 0x49, 0x04, 0xc0, 0x7c, 0x38, 0xf4, 0xaf, 0x6b, 0x27, 0xe3, 0x9f, 0x5a, 0x16, 0xd2, 0x8e,
    0x4a, 0x05, 0xc1, 0x7d, 0x39, 0xf5, 0xb0, 0x6c, 0x28, 0xe4, 0xa0, 0x5b, 0x17, 0xd3, 0x8f, 0x4b,
    0x06, 0xc2, 0x7e, 0x3a, 0xf6, 0xb1, 0x6d, 0x29, 0xe5, 0xa1, 0x5c, 0x18, 0xd4, 0x90, 0x4c, 0x07,
    0xc3, 0x7f, 0x3b, 0xf7, 0xb2, 0x6e, 0x2a, 0xe6, 0xa2, 0x5d, 0x19, 0xd5, 0x91, 0x4d, 0x08, 0xc4,
    0x80, 0x3c, 0xf8, 0xb4, 0x6f, 0x2b, 0xe7, 0xa3, 0x5f, 0x1a, 0xd6, 0x92, 0x4e, 0x0a, 0xc5, 0x81,
    0x3d, 0xf9, 0xb5, 0x70, 0x2c, 0xe8, 0xa4, 0x60, 0x1b, 0xd7, 0x93, 0x4f, 0x0b, 0xc6, 0x82, 0x3e,
    0xfa, 0xb6, 0x71, 0x2d, 0xe9, 0xa5, 0x61, 0x1c, 0xd8, 0x94, 0x50, 0x0c, 0xc7, 0x83, 0x3f, 0xfb,
    0xb7, 0x72, 0x2e, 0xea, 0xa6, 0x62, 0x1d, 0xd9, 0x95, 0x51, 0x0d, 0xc8, 0x84, 0x40, 0xfc, 0xb8,
    0x73, 0x2f, 0xeb, 0xa7, 0x63, 0x1e, 0xda, 0x96, 0x52, 0x0e, 0xca, 0x85, 0x41, 0xfd, 0xb9, 0x75,
    0x30, 0xec, 0xa8, 0x64, 0x20, 0xdb, 0x97, 0x53, 0x0f, 0xcb, 0x86, 0x42, 0xfe, 0xba, 0x76, 0x31,
    0xed, 0xa9, 0x65, 0x21, 0xdc, 0x98, 0x54, 0x10, 0xcc, 0x87, 0x43, 0xff, 0xbb, 0x77, 0x32, 0xee,
    0xaa, 0x66, 0x22, 0xdd, 0x99, 0x55, 0x11, 0xcd, 0x88, 0x44, 0x00, 0xbc, 0x78, 0x33, 0xef, 0xab,
    0x67, 0x23, 0xde, 0x9a, 0x56, 0x12, 0xce, 0x89, 0x45, 0x01, 0xbd, 0x79, 0x34, 0xf0, 0xac, 0x68,
    0x24, 0xe0, 0x9b, 0x57, 0x13, 0xcf, 0x8b, 0x46, 0x02, 0xbe, 0x7a, 0x36, 0xf1, 0xad, 0x69, 0x25,
    0xe1, 0x9c, 0x58, 0x14, 0xd0, 0x8c, 0x47, 0x03, 0xbf, 0x7b, 0x37, 0xf2, 0xae, 0x6a, 0x26, 0xe2,
    0x9d, 0x59, 0x15, 0xd1, 0x8d, 0x48, 0x04, 0xc0, 0x7c, 0x38, 0xf3, 0xaf, 0x6b, 0x27, 0xe3, 0x9e,
    0x5a, 0x16, 0xd2, 0x8e, 0x49, 0x05, 0xc1, 0x7d, 0x39, 0xf4, 0xb0, 0x6c, 0x28, 0xe4, 0x9f, 0x5b,
    0x17, 0xd3, 0x8f, 0x4a, 0x06, 0xc2, 0x7e, 0x3a, 0xf6, 0xb1, 0x6d, 0x29, 0xe5, 0xa1, 0x5c, 0x18,
    0xd4, 0x90, 0x4c, 0x07, 0xc3, 0x7f, 0x3b, 0xf7, 0xb2, 0x6e, 0x2a, 0xe6, 0xa2, 0x5d, 0x19, 0xd5,
    0x91, 0x4d, 0x08, 0xc4, 0x80, 0x3c, 0xf8, 0xb3, 0x6f, 0x2b, 0xe7, 0xa3, 0x5e, 0x1a, 0xd6, 0x92,
    0x4e, 0x09, 0xc5, 0x81, 0x3d, 0xf9, 0xb4, 0x70, 0x2c, 0xe8, 0xa4, 0x5f, 0x1b, 0xd7, 0x93, 0x4f,
    0x0a, 0xc6, 0x82, 0x3e, 0xfa, 0xb5, 0x71, 0x2d, 0xe9, 0xa5, 0x60, 0x1c, 0xd8, 0x94, 0x50, 0x0c,
    0xc7, 0x83, 0x3f, 0xfb, 0xb7, 0x72, 0x2e, 0xea, 0xa6, 0x62, 0x1d, 0xd9, 0x95, 0x51, 0x0d, 0xc8,
    0x84, 0x40, 0xfc, 0xb8, 0x73, 0x2f, 0xeb, 0xa7, 0x63, 0x1e, 0xda, 0x96, 0x52, 0x0e, 0xc9, 0x85,
    0x41, 0xfd, 0xb9, 0x74, 0x30, 0xec, 0xa8, 0x64, 0x1f, 0xdb, 0x97, 0x53, 0x0f, 0xca, 0x86, 0x42,
    0xfe, 0xba, 0x75, 0x31, 0xed, 0xa9, 0x65, 0x20, 0xdc, 0x98, 0x54, 0x10, 0xcb, 0x87, 0x43, 0xff,
    0xbb, 0x77, 0x32, 0xee, 0xaa, 0x66, 0x22, 0xdd, 0x99, 0x55, 0x11, 0xcd, 0x88, 0x44, 0x00, 0xbc,
    0x78, 0x33, 0xef, 0xab, 0x67, 0x23, 0xde, 0x9a, 0x56, 0x12, 0xce, 0x89, 0x45, 0x01, 0xbd, 0x79,
    0x34, 0xf0, 0xac, 0x68, 0x24, 0xdf, 0x9b, 0x57, 0x13, 0xcf, 0x8a, 0x46, 0x02, 0xbe, 0x7a, 0x35,
    0xf1, 0xad, 0x69, 0x25, 0xe0, 0x9c, 0x58, 0x14, 0xd0, 0x8b, 0x47, 0x03, 0xbf, 0x7b, 0x36, 0xf2,
    0xae, 0x6a, 0x26, 0xe1, 0x9d, 0x59, 0x15, 0xd1, 0x8d, 0x48, 0x04, 0xc0, 0x7c, 0x38, 0xf3, 0xaf,
    0x6b, 0x27, 0xe3, 0x9e, 0x5a, 0x16, 0xd2, 0x8e, 0x49, 0x05, 0xc1, 0x7d, 0x39, 0xf4, 0xb0, 0x6c,
    0x28, 0xe4, 0x9f, 0x5b, 0x17, 0xd3, 0x8f, 0x4a, 0x06, 0xc2, 0x7e, 0x3a, 0xf5, 0xb1, 0x6d, 0x29,
    0xe5, 0xa0, 0x5c, 0x18, 0xd4, 0x90, 0x4b, 0x07, 0xc3, 0x7f, 0x3b, 0xf6, 0xb2, 0x6e, 0x2a, 0xe6,
    0xa1, 0x5d, 0x19, 0xd5, 0x91, 0x4c, 0x08, 0xc4, 0x80, 0x3c, 0xf7, 0xb3, 0x6f, 0x2b, 0xe7, 0xa3,
    0x5e, 0x1a, 0xd6, 0x92, 0x4e, 0x09, 0xc5, 0x81, 0x3d, 0xf9, 0xb4, 0x70, 0x2c, 0xe8, 0xa4, 0x5f,
    0x1b, 0xd7, 0x93, 0x4f, 0x0a, 0xc6, 0x82, 0x3e, 0xfa, 0xb5, 0x71, 0x2d, 0xe9, 0xa5, 0x60, 0x1c,
};
