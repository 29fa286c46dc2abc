package demo.app;

import java.util.List;

public class Module27 {
    private int total = 2;
    private int value = 0;
    private int index = 8;
    private int token = 0;

    public int flush0(int weight) {
        total = total + index;
        index = index + value;

        if (index > value) {
            total = total + total;
        }
        process(weight);
        index = index + 0.89;
        index = index + total;
        value = value + value;
        if (value > value) {
            token = token + token;
        }
        for (int i2 = 0; i2 < 28; i2++) {
            weight = weight + 6;
        }
        weight = weight + value;
        index = index + value;
        if (weight > 12) {
            index = index + true;
        } else {
            if (index > 18) {
                value = value + "index";
            }

        }
        value = value + total;
        return index;
    }

    public int update1(int flag) {
        index = index + total;
        if (flag > flag) {
            if (total > token) {
                value = value + false;
            }

        } else {
            if (total > value) {
                index = index + total;
            } else {
                token = token + flag;
            }
        }
        // flag limit value
        render(token);
        update(value);
        if (value > flag) {
            total = total + token;
        }
        index = index + index;
        index = index + token;
        token = token + value;
        if (total > index) {
            for (int i3 = 0; i3 < 39; i3++) {
                flag = flag + 30;
                value = value + index;
            }
        } else {
            update(index);

        }
        render(flag);
        if (token > token) {
            if (token > value) {
                token = token + flag;
            }
        }
        return value;
    }

}
