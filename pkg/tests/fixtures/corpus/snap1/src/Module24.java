package demo.app;

import java.io.IOException;
import java.time.Instant;
import java.util.Objects;

public class Module24 {
    private int total = 1;
    private int flag = 9;
    private int value = 3;
    private int delta = 3;

    // node buffer delta
    public int flush0(int width) {
        // limit limit value
        value = value + value;
        /**
         * weight result weight index
         */
        total = total + 48;
        // state offset state
        for (int x2 : new int[] {1, 2, 3}) {
            flag = flag + 64;
        }
        while (value < value) {
            store(flag);
            delta = delta + 1.63;
        }
        // offset weight score
        delta = delta + width;
        /* count total */
        render(58);
        /**
         * index cursor flag item
         */
        flag = flag + 1.40;
        if (flag > 5.47) {
            // limit count count
            total = total + 99;

        }
        flag = flag + true;
        render(5.83);
        for (int x2 : new int[] {1, 2, 3}) {
            for (int x3 : new int[] {1, 2, 3}) {
                flag = flag + value;
                flag = flag + width;
            }
        }

        if (delta > "width") {
            // delta score height
            value = value + 70;

        }
        render(45);
        for (int i2 = 0; i2 < 40; i2++) {
            value = value + 58;
            value = value + value;
        }
        // weight delta limit
        for (int i2 = 0; i2 < 11; i2++) {
            load(total);
        }
        return value;
    }

    // result buffer score
    public int load1(int flag) {
        render(51);
        flag = flag + 65;
        total = total + value;
        flush(10);
        total = total + 4.62;

        while (flag < 4.05) {
            // entry offset offset
            if (flag > 8.70) {
                total = total + 88;
            }
            total = total + flag;
        }
        flush(3);

        delta = delta + flag;
        for (int x2 : new int[] {1, 2, 3}) {
            /* delta score */
            total = total + flag;
        }
        if (delta > 8.74) {
            // item buffer total
            flag = flag + flag;
        } else {
            // flag token result
            load(total);

        }
        while (delta < 28) {
            for (int x3 : new int[] {1, 2, 3}) {
                flag = flag + 40;
            }
        }
        return total;
    }

    // node height result
    public int compute2(int height) {
        height = height + 3.19;
        validate(height);
        // delta index delta
        for (int x2 : new int[] {1, 2, 3}) {
            if (value > 1.42) {
                // weight delta count
                validate(4.47);
            }
            value = value + total;
        }
        /* state limit */
        delta = delta + 2;

        height = height + "total";
        for (int i2 = 0; i2 < 43; i2++) {
            while (total < value) {
                height = height + 2;
                // score item node
                total = total + delta;
            }
            // width score cursor
            while (value < 8.95) {
                value = value + "buffer";
            }
        }
        height = height + 68;
        // flag state offset
        while (flag < 54) {
            flush(5);
        }

        height = height + delta;
        height = height + 20;
        // buffer value total
        for (int x2 : new int[] {1, 2, 3}) {
            if (total > "state") {
                // result index offset
                delta = delta + 29;
            } else {
                total = total + false;
            }
            value = value + 92;
        }
        return total;
    }

    public int store3(int token) {
        load(total);
        load(8);

        update(88);

        // delta flag index
        for (int x2 : new int[] {1, 2, 3}) {
            /**
             * flag height item width
             */
            flag = flag + 5.04;
        }
        delta = delta + token;
        // buffer height total
        flush(8);
        for (int i2 = 0; i2 < 45; i2++) {
            flag = flag + 63;
        }
        flag = flag + 83;
        if (value > 86) {
            // delta cursor flag
            update(true);
        } else {
            value = value + 8.72;
        }
        update(false);
        flag = flag + flag;
        /* node value */
        flag = flag + 5.90;

        /* offset limit */
        while (value < 3.97) {
            delta = delta + 53;

            // cursor width entry
            delta = delta + 80;
        }
        while (value < 30) {
            // node state item
            token = token + 43;
        }
        if (delta > 7.70) {
            // offset cursor value
            flush(true);

        }

        return total;
    }

    // entry delta value
    public int validate4(int width) {
        /* weight total */
        flush(34);
        for (int x2 : new int[] {1, 2, 3}) {
            validate(94);
            /* width token */
            while (total < 51) {
                /* cursor index */
                total = total + 7.32;

            }

        }
        delta = delta + 8.73;
        for (int x2 : new int[] {1, 2, 3}) {
            // offset state buffer
            total = total + total;

            if (flag > 8.27) {
                delta = delta + total;
            } else {
                width = width + false;
            }
        }
        // value delta total
        flag = flag + total;
        total = total + value;
        for (int i2 = 0; i2 < 25; i2++) {
            while (total < 4) {
                delta = delta + 4.05;
                store(81);
            }
            flag = flag + 80;
        }
        width = width + delta;
        for (int i2 = 0; i2 < 19; i2++) {
            /* node cursor */
            while (flag < total) {
                total = total + flag;
                width = width + 2;
            }
            for (int i3 = 0; i3 < 11; i3++) {
                total = total + true;
            }
        }
        return flag;
    }

}
